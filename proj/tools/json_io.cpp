#include "json_io.hpp"

#include <limits>

namespace mukai::io {

namespace {

std::string escape_key(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

json strings(const std::vector<std::string>& xs) { return json(xs); }

}  // namespace

bool Node::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

Node Node::operator[](const std::string& key) const {
  if (!value_->is_object()) fail("expected an object");
  auto it = value_->find(key);
  if (it == value_->end()) throw ParseError(path_ + "/" + escape_key(key), "missing field");
  return Node(*it, path_ + "/" + escape_key(key));
}

Node Node::operator[](std::size_t index) const {
  if (!value_->is_array()) fail("expected an array");
  if (index >= value_->size()) fail("index " + std::to_string(index) + " out of range");
  return Node((*value_)[index], path_ + "/" + std::to_string(index));
}

std::size_t Node::size() const {
  if (!value_->is_array()) fail("expected an array");
  return value_->size();
}

void Node::fail(const std::string& message) const { throw ParseError(path_.empty() ? "/" : path_, message); }

void Node::violate(const std::string& message) const {
  throw HypothesisError(path_.empty() ? "/" : path_, message);
}

Integer Node::integer() const {
  if (value_->is_number_integer()) {
    if (value_->is_number_unsigned()) return Integer(value_->get<std::uint64_t>());
    return Integer(value_->get<std::int64_t>());
  }
  if (value_->is_string()) {
    Rational r;
    try {
      r = parse_rational(value_->get<std::string>());
    } catch (const InputError& e) {
      fail(e.what());
    }
    if (denominator(r) != 1) fail("expected an integer, got " + value_->get<std::string>());
    return numerator(r);
  }
  fail("expected an integer");
}

Rational Node::rational() const {
  if (value_->is_number_integer()) return Rational(integer());
  if (value_->is_string()) {
    try {
      return parse_rational(value_->get<std::string>());
    } catch (const InputError& e) {
      fail(e.what());
    }
  }
  fail("expected a rational (integer or \"p/q\" string)");
}

int Node::small_int() const {
  const Integer x = integer();
  if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min()) fail("integer out of range");
  return x.convert_to<int>();
}

std::string Node::string() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

IntVector Node::int_vector(std::optional<Eigen::Index> length) const {
  const std::size_t n = size();
  if (length && static_cast<Eigen::Index>(n) != *length)
    fail("expected " + std::to_string(*length) + " entries, got " + std::to_string(n));
  IntVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = (*this)[i].integer();
  return v;
}

RatVector Node::rat_vector(std::optional<Eigen::Index> length) const {
  const std::size_t n = size();
  if (length && static_cast<Eigen::Index>(n) != *length)
    fail("expected " + std::to_string(*length) + " entries, got " + std::to_string(n));
  RatVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = (*this)[i].rational();
  return v;
}

Surface read_surface(const Node& node) {
  const std::string kind_text = node["kind"].string();
  SurfaceKind kind;
  if (kind_text == "K3") kind = SurfaceKind::K3;
  else if (kind_text == "abelian") kind = SurfaceKind::Abelian;
  else node["kind"].fail("kind must be \"K3\" or \"abelian\"");

  const Node gram = node["gram"];
  const std::size_t n = gram.size();
  if (n == 0) gram.fail("gram must be nonempty");
  IntMatrix g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    IntVector row = gram[i].int_vector(static_cast<Eigen::Index>(n));
    g.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  std::optional<NSLattice> lattice;
  try {
    lattice.emplace(g);
  } catch (const InputError& e) {
    gram.fail(e.what());
  }
  const RatVector ref = node["reference_ample"].rat_vector(static_cast<Eigen::Index>(n));
  RatVector canonical = RatVector::Zero(static_cast<Eigen::Index>(n));
  if (node.has("canonical")) canonical = node["canonical"].rat_vector(static_cast<Eigen::Index>(n));
  try {
    return Surface(kind, *lattice, ref, canonical);
  } catch (const InputError& e) {
    node["reference_ample"].fail(e.what());
  }
}

MukaiVector read_mukai_vector(const Node& node, const Surface& surface) {
  MukaiVector v{node["v0"].integer(), node["v1"].int_vector(surface.picard_rank()), node["v2"].integer()};
  if (v.rank.sign() < 0) node["v0"].fail("v0 must be nonnegative");
  return v;
}

NumericalSheaf read_sheaf(const Node& node, const Surface& surface) {
  NumericalSheaf e{node["rank"].integer(), node["c1"].int_vector(surface.picard_rank()), node["chi"].integer()};
  if (e.rank.sign() < 0) node["rank"].fail("rank must be nonnegative");
  return e;
}

RatVector read_class(const Node& node, const Surface& surface) { return node.rat_vector(surface.picard_rank()); }

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return to_string(x);
}

json to_json(const Rational& x) { return to_string(x); }

json to_json(const IntVector& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(to_json(x[i]));
  return out;
}

json to_json(const RatVector& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(to_json(x[i]));
  return out;
}

json to_json(const MukaiVector& v) { return {{"v0", to_json(v.rank)}, {"v1", to_json(v.c1)}, {"v2", to_json(v.v2)}}; }

json to_json(const NumericalSheaf& e) {
  return {{"rank", to_json(e.rank)}, {"c1", to_json(e.c1)}, {"chi", to_json(e.chi)}};
}

json to_json(const Surface& s) {
  json gram = json::array();
  const IntMatrix& g = s.ns().gram<Integer>();
  for (Eigen::Index i = 0; i < g.rows(); ++i) gram.push_back(to_json(IntVector(g.row(i).transpose())));
  return {{"kind", s.kind() == SurfaceKind::K3 ? "K3" : "abelian"},
          {"epsilon", s.epsilon()},
          {"gram", gram},
          {"reference_ample", to_json(s.reference_ample())},
          {"canonical", to_json(s.canonical())}};
}

json to_json(const Wall& w) {
  json out{{"normal", to_json(w.normal)}};
  if (const auto* xi = std::get_if<XiWitness>(&w.witness)) {
    out["kind"] = "xi";
    out["xi_square"] = to_json(xi->xi_square);
    out["witness"] = {{"xi", to_json(w.normal)}};
  } else {
    const auto& l = std::get<LWitness>(w.witness);
    out["kind"] = "L";
    out["witness"] = {{"ell", to_json(l.ell)}, {"chi_sub", to_json(l.chi_sub)}, {"L", to_json(l.L)}};
  }
  return out;
}

json to_json(const std::vector<Wall>& walls) {
  json out = json::array();
  for (const Wall& w : walls) out.push_back(to_json(w));
  return out;
}

json to_json(const SegmentWallReport& r) {
  json crossings = json::array();
  for (const Crossing& c : r.crossings) {
    crossings.push_back({{"t", to_json(c.t)},
                         {"wall", to_json(c.wall)},
                         {"at_start", c.at_start},
                         {"at_end", c.at_end},
                         {"contains_segment", c.contains_segment}});
  }
  return {{"from", to_json(r.from)},
          {"to", to_json(r.to)},
          {"crossings", crossings},
          {"crosses_interior", r.crosses_interior()}};
}

json to_json(const Poly2& p) {
  json coeffs = json::object();
  for (const auto& [key, c] : p.terms()) coeffs[std::to_string(key.first) + "," + std::to_string(key.second)] = to_json(c);
  return {{"coeffs", coeffs}};
}

json to_json(const StabilityVerdict& v) {
  json rejected = json::array();
  for (const auto& d : v.rejected) rejected.push_back({{"index", d.index}, {"message", d.message}});
  return {{"label", to_string(v.label)},
          {"witnesses",
           {{"h_destabilizing", v.h_destabilizing},
            {"h_equal", v.h_equal},
            {"ha_destabilizing", v.ha_destabilizing},
            {"ha_equal", v.ha_equal}}},
          {"rejected", rejected},
          {"purity_assumed", v.purity_assumed},
          {"relative_to_candidates", true}};
}

json to_json(const ClassificationReport& r) {
  json out{{"mukai_vector", to_json(r.v)},
           {"multiplicity", to_json(r.multiplicity)},
           {"primitive", to_json(r.primitive)},
           {"mukai_square", to_json(r.mukai_square)},
           {"status", to_string(r.status)},
           {"smooth_moduli", r.smooth_moduli},
           {"within_hypotheses", r.within_hypotheses},
           {"walls_at_h", to_json(r.walls_at_h)},
           {"detail", r.detail},
           {"assumptions", strings(r.assumptions)},
           {"notes", strings(r.notes)},
           {"citations", strings(r.citations)}};
  out["dimension"] = r.dimension ? to_json(*r.dimension) : json(nullptr);
  out["h_general"] = r.h_general ? json(*r.h_general) : json(nullptr);
  out["general_neighbor"] = r.general_neighbor ? to_json(*r.general_neighbor) : json(nullptr);
  out["deformation_class"] =
      r.deformation_class ? json{{"type", "HilbK3"}, {"n", to_json(r.deformation_class->n)}} : json(nullptr);
  if (r.twisted) out["twist"] = {{"by", to_json(*r.twist_class)}, {"result", to_json(*r.twisted)}};
  return out;
}

json to_json(const DecompositionCandidate& d) {
  json parts = json::array();
  for (const auto& p : d.parts) parts.push_back({{"n", to_json(p.n)}, {"v", to_json(p.v)}});
  return {{"parts", parts}, {"trivial", d.trivial}};
}

json to_json(const TerminalisationShape& t) {
  json factors = json::array();
  for (const auto& f : t.factors) {
    json j{{"kind", to_string(f.kind)}, {"n", to_json(f.n)}, {"v", to_json(f.v)}, {"dimension", to_json(f.dimension)}};
    j["part_status"] = f.part_status ? json(to_string(*f.part_status)) : json(nullptr);
    factors.push_back(j);
  }
  return {{"factors", factors},
          {"smooth", t.smooth},
          {"dimension", to_json(t.dimension)},
          {"status", to_string(t.status)},
          {"citations", strings(t.citations)}};
}

namespace {

json bound_json(const std::optional<BoundCheck>& b) {
  if (!b) return "hypotheses unmet";
  return {{"value", to_json(b->value)}, {"bound", to_json(b->bound)}, {"satisfied", b->satisfied}};
}

}  // namespace

json to_json(const FiltrationReport& r) {
  json out{{"total", to_json(r.total)},
           {"defect_lhs", to_json(r.defect_lhs)},
           {"defect_rhs", to_json(r.defect_rhs)},
           {"identity_holds", r.defect_lhs == r.defect_rhs},
           {"hypotheses",
            {{"equal_h_slope", r.equal_h_slope},
             {"distinct_c1_over_r", r.distinct_c1_over_r},
             {"deltas_nonnegative", r.deltas_nonnegative}}},
           {"delta_bound", bound_json(r.delta_bound)},
           {"delta_lcm_bound", bound_json(r.delta_lcm_bound)},
           {"delta_simple_bound", bound_json(r.delta_simple_bound)},
           {"chi_bound", bound_json(r.chi_bound)},
           {"notes", strings(r.notes)}};
  if (r.rank2) {
    out["rank2_identity"] = {{"c1_difference_square", to_json(r.rank2->c1_difference_square)},
                             {"v_square_minus_4", to_json(r.rank2->v_square_minus_4)},
                             {"parts_sum", to_json(r.rank2->parts_sum)},
                             {"pairing", to_json(r.rank2->pairing)},
                             {"holds", r.rank2->holds},
                             {"hodge_sign", r.rank2->hodge_sign}};
  } else {
    out["rank2_identity"] = nullptr;
  }
  return out;
}

json to_json(const GateResult& g) { return {{"guaranteed", g.guaranteed}, {"reason", g.reason}}; }

}  // namespace mukai::io
