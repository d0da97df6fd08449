#include "mukai/classifier.hpp"

namespace mukai {

namespace {

const char* kNonempty = "M^s_H(v) nonempty";
const char* kConeProxy = "ample cone approximated by the positive cone of the reference class";

void check_epsilon(int epsilon) {
  if (epsilon != 0 && epsilon != 1) throw InputError("epsilon must be 0 or 1");
}

ClassificationReport base_report(const Surface& surface, const MukaiVector& v) {
  ClassificationReport report;
  report.v = v;
  auto split = primitive_part(v);
  report.multiplicity = split.multiplicity;
  report.primitive = split.primitive;
  report.mukai_square = mukai_square(surface.ns(), v);
  return report;
}

// Fills h_general, walls_at_h and a general neighbor for `v` at h.
void attach_generality(ClassificationReport& report, const Surface& surface, const MukaiVector& v,
                       const RatVector& h) {
  try {
    report.walls_at_h = walls_at(surface, h, v);
    report.h_general = report.walls_at_h.empty();
  } catch (const UnsupportedError& e) {
    report.notes.push_back(std::string("generality of H not decided: ") + e.what());
    return;
  }
  if (*report.h_general) return;
  try {
    report.general_neighbor = general_neighbor(surface, h, v);
  } catch (const DomainError& e) {
    report.notes.push_back(std::string("no general neighbor found: ") + e.what());
  } catch (const UnsupportedError& e) {
    report.notes.push_back(std::string("no general neighbor found: ") + e.what());
  }
}

// v² < 0: outside every theorem used here.
void out_of_hypothesis(ClassificationReport& report) {
  report.within_hypotheses = false;
  if (report.mukai_square == -2) {
    report.status = ModuliStatus::SmoothAlready;
    report.dimension = Integer(0);
    report.smooth_moduli = true;
    report.detail = "rigid: a nonempty moduli space is a single reduced point";
    report.citations.push_back("Thm 3.2");
  } else {
    report.status = ModuliStatus::ConditionUnverified;
    report.detail = "v^2 < -2: no simple sheaf has this Mukai vector";
  }
}

}  // namespace

Rational phi(const Integer& v0, int epsilon) {
  check_epsilon(epsilon);
  if (v0 < 2) throw DomainError("phi needs v0 >= 2");
  const Integer e = epsilon;
  const Integer q = Integer(v0 * v0) / 4;
  Rational inner = Rational(v0 * v0 * v0 - (2 - e) * v0 * v0 + v0 * (1 - 2 * e)) - Rational(v0 - 1) / Rational(q);
  return 2 * inner;
}

std::string to_string(ModuliStatus status) {
  switch (status) {
    case ModuliStatus::SymplecticResolutionExists: return "SymplecticResolutionExists";
    case ModuliStatus::SingularTerminalisationNoResolution: return "SingularTerminalisationNoResolution";
    case ModuliStatus::SmoothAlready: return "SmoothAlready";
    case ModuliStatus::ConditionUnverified: return "ConditionUnverified";
  }
  return "?";
}

ClassificationReport classify_dim1(const Surface& surface, const MukaiVector& v, const RatVector& h) {
  if (!v.rank.is_zero()) throw InputError("classify_dim1 needs v0 = 0");
  if (v.c1.size() != surface.picard_rank()) throw InputError("v1 has the wrong length");
  if (is_zero(v.c1)) throw InputError("v1 must be nonzero");
  require_positive_cone(surface, h, "H");
  if (intersect(surface.ns(), to_rational(v.c1), surface.reference_ample()).sign() <= 0)
    throw DomainError("v1 must pair positively with the reference ample class");

  ClassificationReport report = base_report(surface, v);
  report.assumptions = {kNonempty, "v1 effective (checked only as v1.H0 > 0)", kConeProxy};
  report.dimension = 2 + report.mukai_square;

  MukaiVector work = v;
  if (v.v2.is_zero()) {
    IntVector line = clear_denominators(h);
    if (intersect(surface.ns(), v.c1, line).is_zero()) line = clear_denominators(surface.reference_ample());
    work = twist(surface, v, line);
    report.twisted = work;
    report.twist_class = line;
    report.notes.push_back("v2 = 0: classified the twist " + to_string(work) + " by " + to_string(line));
  }

  if (report.mukai_square.sign() < 0) {
    out_of_hypothesis(report);
    if (report.status == ModuliStatus::ConditionUnverified) report.dimension.reset();
    return report;
  }

  attach_generality(report, surface, work, h);
  const bool primitive = report.multiplicity == 1;
  if (primitive || report.mukai_square == 8) {
    report.status = ModuliStatus::SymplecticResolutionExists;
    report.citations.push_back("Thm 4.2(1)");
    report.detail = primitive ? "v primitive" : "v^2 = 8";
    report.smooth_moduli = primitive;
    if (report.h_general && !*report.h_general)
      report.notes.push_back("H is not v-general: the resolution is realized over M_A(v) for A in a chamber touching H");
  } else {
    report.status = ModuliStatus::SingularTerminalisationNoResolution;
    report.citations.push_back("Thm 4.2(2)");
    report.detail = "v not primitive and v^2 != 8: singular locally factorial terminalisation";
  }
  return report;
}

ClassificationReport classify_dim2(const Surface& surface, const MukaiVector& v, const RatVector& h) {
  if (v.rank.sign() <= 0) throw InputError("classify_dim2 needs v0 >= 1");
  if (v.c1.size() != surface.picard_rank()) throw InputError("v1 has the wrong length");
  require_positive_cone(surface, h, "H");

  ClassificationReport report = base_report(surface, v);
  report.assumptions = {kNonempty, kConeProxy};
  const Integer& m = report.multiplicity;
  const MukaiVector& w = report.primitive;
  const Integer w2 = mukai_square(surface.ns(), w);

  if (w2.sign() < 0) {
    out_of_hypothesis(report);
    return report;
  }
  report.dimension = 2 + report.mukai_square;
  attach_generality(report, surface, v, h);
  const bool general = report.h_general.value_or(false);

  if (w2.is_zero()) {
    report.citations.push_back("Thm 5.3(1)");
    report.detail = "w^2 = 0: the moduli space over (H,A) is a nonsingular surface";
    report.smooth_moduli = true;
    if (m == 1) {
      report.status = ModuliStatus::SymplecticResolutionExists;
      report.citations.insert(report.citations.begin(), "Main Thm(1)");
    } else {
      report.status = ModuliStatus::SmoothAlready;
      report.notes.push_back("m >= 2 with w^2 = 0: the stable locus is assumed nonempty, which is rarely the case");
    }
  } else if (m == 1 || report.mukai_square == 8) {
    report.status = ModuliStatus::SymplecticResolutionExists;
    report.citations.push_back("Main Thm(1)");
    if (m == 1) {
      report.citations.push_back("Thm 5.3(2a)");
      report.detail = "m = 1: M_{H,A}(v) is nonsingular";
      report.smooth_moduli = general;
    } else {
      report.citations.push_back("Thm 5.3(2b-i)");
      report.detail = "m = 2, w^2 = 2: singular locus of codimension 2, admits a symplectic resolution";
    }
    report.assumptions.push_back("A is v-general");
  } else {
    const bool w0_one = w.rank == 1;
    const bool phi_ok = !w0_one && w2 > phi(w.rank, surface.epsilon());
    if (general || w0_one || phi_ok) {
      report.status = ModuliStatus::SingularTerminalisationNoResolution;
      report.citations.push_back("Main Thm(2)");
      report.citations.push_back("Thm 5.3(2b-ii)");
      report.detail =
          "locally factorial, singular locus of codimension at least 4, terminal singularities; no symplectic resolution";
      report.notes.push_back(general ? "gate: H is mv-general"
                                     : (w0_one ? "gate: w0 = 1" : "gate: w^2 > phi(w0)"));
      if (phi_ok) report.citations.push_back("Thm 6.5");
      report.assumptions.push_back("A is v-general");
    } else {
      report.status = ModuliStatus::ConditionUnverified;
      report.citations.push_back("Thm 5.3(3)");
      report.detail = "existence of an (H,A)-stable sheaf with vector w not established";
      report.assumptions.push_back("existence gate not established");
      report.notes.push_back(
          "if the stable locus for w is empty and m is 2 or 3, the moduli space would be nonsingular; no such case is "
          "known");
    }
  }

  if (m == 1 && surface.kind() == SurfaceKind::K3 && (w.rank == 1 || w2 > phi(w.rank, surface.epsilon()))) {
    report.deformation_class = HilbK3{w2 / 2 + 1};
    report.citations.push_back("Cor 6.6");
  }
  return report;
}

ClassificationReport classify(const Surface& surface, const MukaiVector& v, const RatVector& h) {
  if (v.rank.sign() < 0) throw InputError("v0 must be nonnegative");
  return v.rank.is_zero() ? classify_dim1(surface, v, h) : classify_dim2(surface, v, h);
}

GateResult existence_gate(const Surface& surface, const MukaiVector& w, const RatVector& h) {
  if (w.rank.sign() <= 0) throw InputError("existence_gate needs w0 >= 1");
  if (!is_primitive(w)) throw InputError("existence_gate needs a primitive w");
  if (w.rank == 1) return {true, "w0 = 1"};
  if (is_general(surface, h, w)) return {true, "H is w-general"};
  const Integer w2 = mukai_square(surface.ns(), w);
  const Rational bound = phi(w.rank, surface.epsilon());
  if (w2 > bound) return {true, "w^2 = " + to_string(w2) + " > phi(w0) = " + to_string(bound)};
  return {false, "gate unestablished: w^2 = " + to_string(w2) + " <= phi(w0) = " + to_string(bound) +
                     " and H lies on a w-wall"};
}

DeformationResult deformation_class(const Surface& surface, const MukaiVector& w, const RatVector& h,
                                    const RatVector& a) {
  if (w.rank.sign() <= 0) throw InputError("deformation_class needs w0 >= 1");
  if (!is_primitive(w)) throw InputError("deformation_class needs a primitive w");
  require_positive_cone(surface, h, "H");
  if (surface.kind() != SurfaceKind::K3) return {std::nullopt, "abelian surface: no deformation class reported"};
  if (!is_general(surface, a, w)) throw DomainError("A must be w-general");
  const Integer w2 = mukai_square(surface.ns(), w);
  if (w.rank == 1 || w2 > phi(w.rank, surface.epsilon())) return {HilbK3{w2 / 2 + 1}, "Cor 6.6"};
  return {std::nullopt, "w^2 <= phi(w0): deformation class not determined"};
}

}  // namespace mukai
