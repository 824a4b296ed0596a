#include "qseries/dsl.hpp"

namespace qseries::dsl {

namespace {

PSeries call(const Expr& e, const Rational& n) {
  switch (e.fn) {
    case Function::phi: return build_phi(e.arg, n);
    case Function::psi: return build_psi(e.arg, n);
    case Function::f: return build_f_sum(e.arg, n);
    case Function::fprod: return build_f_product(e.arg, n);
    case Function::chi: return build_chi(e.arg, n);
    case Function::theta1: return build_theta_sum(1, {e.param}, e.arg, n);
    case Function::theta2: return build_theta_sum(2, {e.param}, e.arg, n);
    case Function::theta3: return build_theta_sum(3, {e.param}, e.arg, n);
    case Function::theta4: return build_theta_sum(4, {e.param}, e.arg, n);
    case Function::S: return build_denominator_sum(e.param, SumVariant::literal, e.arg, n);
    case Function::T: return build_denominator_sum(e.param, SumVariant::signed_, e.arg, n);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown function");
}

PSeries eval_node(const Expr& e, const Rational& n, Kernel kernel) {
  using K = Expr::Kind;
  // Children raise their own spanned errors; only errors born at this node
  // get this node's span.
  const auto here = [&](auto&& f) -> PSeries {
    try {
      return f();
    } catch (const Error& err) {
      if (err.has_span()) throw;
      throw Error(err.kind(), err.detail(), e.span);
    }
  };
  switch (e.kind) {
    case K::Literal: return PSeries::constant(K5(e.value), n);
    case K::SqrtFive: return PSeries::constant(K5::sqrt5(), n);
    case K::QPow: return here([&] { return ps_shift(PSeries::constant(1, n), e.value); });
    case K::Neg: return -eval_node(e.children[0], n, kernel);
    case K::Pow: {
      PSeries base = eval_node(e.children[0], n, kernel);
      return here([&] { return ps_pow(base, e.param, kernel); });
    }
    case K::Call: return here([&] { return call(e, n); });
    default: break;
  }
  const PSeries a = eval_node(e.children[0], n, kernel);
  const PSeries b = eval_node(e.children[1], n, kernel);
  return here([&] {
    switch (e.kind) {
      case K::Add: return ps_add(a, b);
      case K::Sub: return ps_sub(a, b);
      case K::Mul: return ps_mul(a, b, kernel);
      default: return ps_div(a, b, kernel);
    }
  });
}

bool mentions_q(const Expr& e) {
  if (e.kind == Expr::Kind::QPow || e.kind == Expr::Kind::Call) return true;
  for (const Expr& c : e.children)
    if (mentions_q(c)) return true;
  return false;
}

}  // namespace

PSeries eval(const Expr& e, const Rational& order, Kernel kernel) {
  if (order.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  PSeries s = eval_node(e, order, kernel);
  return s.order() > order ? s.truncated(order) : s;
}

K5 parse_k5(std::string_view text) {
  const Expr e = parse(text);
  if (mentions_q(e)) throw Error(ErrorKind::InvalidArgument, "not a constant: '" + std::string(text) + "'");
  return eval(e, Rational(1)).slot(0);
}

}  // namespace qseries::dsl
