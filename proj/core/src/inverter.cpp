#include "trinom/inverter.hpp"

#include "trinom/linalg2.hpp"

namespace trinom {

namespace {

void require_family(const FamilyInstance& inst, FamilyId expected, Bits a) {
  if (inst.id() != expected) {
    throw Error(Errc::InvalidArgument, std::string("instance is ") +
                                           std::string(to_string(inst.id())) + ", expected " +
                                           std::string(to_string(expected)));
  }
  if (!inst.field().contains(a)) {
    throw Error(Errc::InvalidArgument, to_hex(a) + " does not fit the instance's field");
  }
  if (a == 0) throw Error(Errc::InvalidArgument, "per-family inversion requires a != 0");
}

// Conjugates a, a^(2^k), a^(2^2k) and their sum.
void fill_conjugates(const FamilyInstance& inst, Bits a, InversionTrace& tr) {
  const FieldSpec& f = inst.field();
  const unsigned k = inst.params().k;
  tr.family = inst.id();
  tr.a = a;
  tr.b = f.frobenius(a, k);
  tr.c = f.frobenius(tr.b, k);
  tr.epsilon = a ^ tr.b ^ tr.c;
}

Bits checked_div(const FieldSpec& f, Bits num, Bits den, const char* what) {
  if (den == 0) {
    throw Error(Errc::ZeroDenominator, std::string("zero denominator: ") + what);
  }
  return f.div(num, den);
}

template <class Extra>
Bits choose(const FamilyInstance& inst, Bits a, InversionTrace& tr, Extra&& extra_check) {
  for (std::size_t i = 0; i < tr.candidates.size(); ++i) {
    const Bits x = tr.candidates[i];
    if (inst(x) == a && extra_check(i)) {
      tr.chosen = x;
      return x;
    }
  }
  std::string list;
  for (Bits x : tr.candidates) list += (list.empty() ? "" : ", ") + to_hex(x);
  throw Error(Errc::NoValidCandidate,
              std::string(to_string(inst.id())) + ": no candidate maps to " + to_hex(a) +
                  " (branch " + tr.branch + ", candidates {" + list + "})");
}

Bits choose(const FamilyInstance& inst, Bits a, InversionTrace& tr) {
  return choose(inst, a, tr, [](std::size_t) { return true; });
}

}  // namespace

Bits invert_f1(const FamilyInstance& inst, Bits a, InversionTrace* trace) {
  require_family(inst, FamilyId::F1, a);
  InversionTrace local;
  InversionTrace& tr = trace ? *trace : local;
  fill_conjugates(inst, a, tr);
  const FieldSpec& f = inst.field();
  const unsigned k = inst.params().k;
  const Bits b = tr.b, c = tr.c, eps = tr.epsilon;

  if (eps == 0) {
    tr.branch = "epsilon=0";
    tr.candidates = {f.sqrt(f.mul(a, c))};
    return choose(inst, a, tr);
  }

  // With v -> eps * v (eps lies in F_{2^k}):
  //   v^(2^(2k+1)) + v^2 + v = a^2 / eps^2
  //   v^4 + v^2 + v + (a^4 + b^4 + a^2 eps^2) / eps^4 = 0
  tr.branch = "epsilon!=0";
  const Bits eps2 = f.square(eps);
  const Bits eps4 = f.square(eps2);
  const Bits a2 = f.square(a);
  const Bits rhs = f.div(a2, eps2);
  const Bits quartic_const = f.div(f.square(a2) ^ f.square(f.square(b)) ^ f.mul(a2, eps2), eps4);
  const LinearizedPoly L(inst.field_ptr(), {{2 * k + 1, 1}, {1, 1}, {0, 1}});
  for (Bits s : solve_affine(L, rhs).elements()) {
    const Bits s2 = f.square(s);
    if ((f.square(s2) ^ s2 ^ s ^ quartic_const) != 0) continue;
    const Bits v = f.mul(eps, s);
    const Bits u = f.frobenius(v, 2 * k);
    const Bits w = eps ^ u ^ v;
    tr.candidates.push_back(f.sqrt(f.mul(v, w)));
  }
  return choose(inst, a, tr);
}

Bits invert_f2(const FamilyInstance& inst, Bits a, InversionTrace* trace) {
  require_family(inst, FamilyId::F2, a);
  InversionTrace local;
  InversionTrace& tr = trace ? *trace : local;
  fill_conjugates(inst, a, tr);
  const FieldSpec& f = inst.field();
  const unsigned k = inst.params().k;
  const Bits b = tr.b, c = tr.c, eps = tr.epsilon;

  const Bits zeta1 = f.mul(a, c) ^ f.square(b) ^ f.square(c);
  const Bits zeta2 = f.mul(a, b) ^ f.square(a) ^ f.square(c);
  tr.zeta1 = zeta1;
  tr.zeta2 = zeta2;
  if (zeta1 == 0) {
    throw Error(Errc::Zeta1Zero, "F2: zeta1 = ac + b^2 + c^2 vanished for a = " + to_hex(a));
  }
  // lambda = zeta2 / zeta1 = zeta1^(2^k - 1)
  const Bits lambda = f.pow(zeta1, (std::uint64_t{1} << k) - 1);
  tr.lambda = lambda;
  const Bits l2 = f.square(lambda);
  const Bits l3 = f.mul(l2, lambda);
  const Bits eta1 = l3 ^ lambda ^ 1;
  if (eta1 != 0) {
    tr.branch = "lambda^3+lambda+1!=0";
    const Bits z = f.div(f.mul(eps, 1 ^ l2) ^ f.mul(b, lambda), eta1);
    tr.candidates = {f.frobenius(z, k)};
  } else {
    tr.branch = "lambda^3+lambda+1=0";
    const Bits l4 = f.square(l2);
    const Bits l5 = f.mul(l4, lambda);
    const Bits y = checked_div(f, b, l5 ^ l3 ^ 1, "F2 lambda^5 + lambda^3 + 1");
    tr.candidates = {f.mul(l4, y)};
  }
  return choose(inst, a, tr);
}

Bits invert_f3(const FamilyInstance& inst, Bits a, InversionTrace* trace) {
  require_family(inst, FamilyId::F3, a);
  InversionTrace local;
  InversionTrace& tr = trace ? *trace : local;
  fill_conjugates(inst, a, tr);
  const FieldSpec& f = inst.field();
  if (a == 1) {
    tr.branch = "a=1";
    tr.candidates = {1};
    return choose(inst, a, tr);
  }
  tr.branch = "closed-form";
  const Bits a2 = f.square(a), b2 = f.square(tr.b), c2 = f.square(tr.c);
  const Bits den = a2 ^ f.mul(a2, b2) ^ f.square(b2) ^ f.square(c2) ^ 1;
  // The quadratic factors as (x + a)(x + a + ab^2 N / D); the ab^2 factor is
  // required, the quotient N / D alone does not invert f.
  const Bits num = f.mul(f.mul(a, b2), a2 ^ b2 ^ c2 ^ 1);
  tr.candidates = {a, a ^ checked_div(f, num, den, "F3 a^2+a^2b^2+b^4+c^4+1")};
  return choose(inst, a, tr);
}

Bits invert_f4(const FamilyInstance& inst, Bits a, InversionTrace* trace) {
  require_family(inst, FamilyId::F4, a);
  InversionTrace local;
  InversionTrace& tr = trace ? *trace : local;
  fill_conjugates(inst, a, tr);
  const FieldSpec& f = inst.field();
  const Bits b = tr.b, c = tr.c;
  const Bits a2 = f.square(a), b2 = f.square(b), bc = f.mul(b, c);
  const Bits abc = f.mul(a, bc);
  // alpha x^3 + beta x^2 + gamma x + theta = 0 has roots beta/alpha and a+1 (double).
  const Bits alpha = a2 ^ b2 ^ bc ^ c ^ 1;
  tr.alpha = alpha;
  tr.beta_coef = abc;
  tr.gamma = f.square(a2) ^ f.mul(a2, bc) ^ f.mul(a2, b2) ^ f.mul(a2, c) ^ b2 ^ bc ^ c ^ 1;
  tr.theta_coef = f.mul(f.mul(a2, a), bc) ^ abc;
  if (alpha == 0) {
    tr.branch = "alpha=0";
    tr.candidates = {a ^ 1};
  } else {
    tr.branch = "alpha!=0";
    tr.candidates = {a ^ 1, f.div(abc, alpha)};
  }
  return choose(inst, a, tr);
}

Bits invert_f5(const FamilyInstance& inst, Bits a, InversionTrace* trace) {
  require_family(inst, FamilyId::F5, a);
  InversionTrace local;
  InversionTrace& tr = trace ? *trace : local;
  fill_conjugates(inst, a, tr);
  const FieldSpec& f = inst.field();
  if (a == 1) {
    tr.branch = "a=1";
    tr.candidates = {1};
    return choose(inst, a, tr);
  }
  tr.branch = "linear";
  const Bits b = tr.b, c = tr.c;
  const Bits a2 = f.square(a), b2 = f.square(b);
  const Bits den = f.mul(a2, c) ^ a2 ^ b2 ^ f.square(c) ^ 1;
  const Bits num = f.mul(a2, a) ^ f.mul(a, b2) ^ f.mul(a, f.mul(b, c)) ^ f.mul(a, c) ^ a;
  tr.candidates = {checked_div(f, num, den, "F5 a^2c+a^2+b^2+c^2+1")};
  return choose(inst, a, tr);
}

Bits invert_f6(const FamilyInstance& inst, Bits a, InversionTrace* trace) {
  require_family(inst, FamilyId::F6, a);
  InversionTrace local;
  InversionTrace& tr = trace ? *trace : local;
  fill_conjugates(inst, a, tr);
  const FieldSpec& f = inst.field();
  const unsigned k = inst.params().k;
  const unsigned m = inst.params().m;
  const Bits w = f.cube_root_of_unity();
  const Bits w2 = f.square(w);
  tr.w = w;
  const Bits A = f.frobenius(a, 2 * m);
  // (wA + a) z^(2^k) + (w^2 A + a) z = A, with z = 1/t and beta = t + w.
  const Bits hi = f.mul(w, A) ^ a;
  const Bits lo = f.mul(w2, A) ^ a;
  std::vector<Bits> zs;
  if (hi == 0 && lo == 0) {
    throw Error(Errc::NoValidCandidate, "F6: both linearized coefficients vanish for a = " + to_hex(a));
  } else if (hi == 0) {
    tr.branch = "wA+a=0";
    zs = {f.div(A, lo)};
  } else if (lo == 0) {
    tr.branch = "w^2A+a=0";
    zs = {f.fractional_power(f.div(A, hi), 1, ExtExponent::pow2(k))};
  } else {
    tr.branch = "linearized";
    const LinearizedPoly L(inst.field_ptr(), {{k, hi}, {0, lo}});
    zs = solve_affine(L, A).elements();
  }

  const ExtExponent unit_circle = ExtExponent::pow2(2 * m) + ExtExponent(1);
  const std::uint64_t theta_exp = (std::uint64_t{1} << k) - 1;
  struct Pipeline {
    Bits z, t, beta, theta;
  };
  std::vector<Pipeline> stages;
  for (Bits z : zs) {
    if (z == 0) continue;
    const Bits t = f.inv(z);
    const Bits beta = t ^ w;
    if (beta == w || f.pow(beta, unit_circle) != 1) continue;  // z = 1 lands here
    const Bits theta = f.pow(beta, theta_exp);
    const Bits den = 1 ^ theta ^ f.mul(theta, beta);  // 1 + beta^(2^k-1) + beta^(2^k)
    tr.candidates.push_back(checked_div(f, a, den, "F6 1+theta+theta^(2^k/(2^k-1))"));
    stages.push_back({z, t, beta, theta});
  }
  std::size_t idx = 0;
  const Bits x = choose(inst, a, tr, [&](std::size_t i) {
    idx = i;
    const Bits cand = tr.candidates[i];
    return f.frobenius(cand, 2 * m) == f.mul(stages[i].theta, cand);
  });
  tr.z = stages[idx].z;
  tr.t = stages[idx].t;
  tr.beta = stages[idx].beta;
  tr.theta = stages[idx].theta;
  return x;
}

Inversion invert(const FamilyInstance& inst, Bits a) {
  if (!inst.field().contains(a)) {
    throw Error(Errc::InvalidArgument, to_hex(a) + " does not fit the instance's field");
  }
  Inversion out{0, {}};
  if (a == 0) {
    out.trace.family = inst.id();
    out.trace.branch = "a=0";
    out.trace.candidates = {0};
    return out;
  }
  switch (inst.id()) {
    case FamilyId::F1: out.x = invert_f1(inst, a, &out.trace); break;
    case FamilyId::F2: out.x = invert_f2(inst, a, &out.trace); break;
    case FamilyId::F3: out.x = invert_f3(inst, a, &out.trace); break;
    case FamilyId::F4: out.x = invert_f4(inst, a, &out.trace); break;
    case FamilyId::F5: out.x = invert_f5(inst, a, &out.trace); break;
    case FamilyId::F6: out.x = invert_f6(inst, a, &out.trace); break;
  }
  return out;
}

FieldElement invert(const FamilyInstance& inst, const FieldElement& a) {
  if (!a.field().same_as(inst.field())) {
    throw Error(Errc::FieldMismatch, "target does not belong to the instance's field");
  }
  return {inst.field_ptr(), invert(inst, a.bits()).x};
}

}  // namespace trinom
