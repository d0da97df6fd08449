#include "cli.hpp"

#include "json_io.hpp"
#include "svg.hpp"

#include "mukai/classifier.hpp"
#include "mukai/decomposition.hpp"
#include "mukai/filtration.hpp"

#ifdef MUKAI_CLI_ORACLE
#include "mukai_oracle/brute_force.hpp"
#endif

#include <functional>
#include <map>

namespace mukai::cli {

namespace {

using io::json;
using io::Node;

struct Context {
  const json& doc;
  Node root;
  std::optional<Surface> surface;
  bool oracle;

  const Surface& s() const { return *surface; }
  MukaiVector v() const { return io::read_mukai_vector(root["v"], s()); }
  RatVector divisor(const std::string& key) const {
    RatVector x = io::read_class(root[key], s());
    if (!in_positive_cone(s(), x)) root[key].violate("class is outside the positive cone");
    return x;
  }
  std::optional<RatVector> optional_divisor(const std::string& key) const {
    if (!root.has(key)) return std::nullopt;
    return divisor(key);
  }
  std::pair<RatVector, RatVector> region() const {
    const Node r = root["region"];
    RatVector from = io::read_class(r["from"], s());
    RatVector to = io::read_class(r["to"], s());
    if (!in_positive_cone(s(), from)) r["from"].violate("class is outside the positive cone");
    if (!in_positive_cone(s(), to)) r["to"].violate("class is outside the positive cone");
    return {from, to};
  }
  Rank0Options rank0() const {
    Rank0Options options;
    if (!root.has("rank0")) return options;
    const Node r = root["rank0"];
    if (r.has("box")) options.box = r["box"].integer();
    if (r.has("candidates")) {
      const Node c = r["candidates"];
      for (std::size_t i = 0; i < c.size(); ++i)
        options.candidates.emplace_back(c[i]["c1"].int_vector(s().picard_rank()), c[i]["chi"].integer());
    }
    return options;
  }
};

#ifdef MUKAI_CLI_ORACLE
std::vector<long> flat_normal(const IntVector& n) {
  std::vector<long> out;
  for (Eigen::Index i = 0; i < n.size(); ++i) out.push_back(n[i].convert_to<long>());
  return out;
}

long oracle_box(const Context& c) { return c.root.has("oracle_box") ? c.root["oracle_box"].small_int() : 20; }
#endif

json phi_table(const Context& c) {
  std::vector<Integer> ranks;
  if (c.root.has("ranks")) {
    const Node r = c.root["ranks"];
    for (std::size_t i = 0; i < r.size(); ++i) ranks.push_back(r[i].integer());
  } else {
    for (int n = 2; n <= 6; ++n) ranks.emplace_back(n);
  }
  std::vector<int> epsilons{0, 1};
  if (c.root.has("epsilon")) epsilons = {c.root["epsilon"].small_int()};
  json rows = json::array();
  for (const Integer& n : ranks) {
    json row{{"v0", io::to_json(n)}};
    for (int e : epsilons) {
      const Rational value = phi(n, e);
      row[e == 0 ? "abelian" : "K3"] = {{"exact", io::to_json(value)}, {"approx", to_decimal(value, 2)}};
    }
    rows.push_back(row);
  }
  return {{"command", "phi"}, {"table", rows}};
}

json walls_report(const Context& c) {
  const MukaiVector v = c.v();
  json out{{"command", "walls"}, {"v", io::to_json(v)}};
  if (v.rank == 1) out["note"] = "v0 = 1: no walls";
  if (c.root.has("h")) {
    const RatVector h = c.divisor("h");
    std::vector<Wall> walls = v.rank.is_zero() ? rank0_walls_through(c.s(), v, h, c.rank0()) : walls_at(c.s(), h, v);
    out["h"] = io::to_json(h);
    out["walls_through_h"] = io::to_json(walls);
#ifdef MUKAI_CLI_ORACLE
    if (c.oracle && v.rank >= 2) {
      std::set<std::vector<long>> mine;
      for (const Wall& w : walls) mine.insert(flat_normal(w.normal));
      const long box = oracle_box(c);
      out["oracle_through_h"] = {{"box", box}, {"agrees", mine == oracle::walls_through(c.s(), h, v, box)}};
    }
#endif
  }
  if (c.root.has("region")) {
    const auto [from, to] = c.region();
    SegmentWallReport report = v.rank.is_zero() ? rank0_walls_on_segment(c.s(), v, from, to, c.rank0())
                                                : walls_on_segment(c.s(), from, to, v);
    out["region"] = io::to_json(report);
    out["wall_count"] = report.crossings.size();
    if (c.s().picard_rank() == 2) {
      json rays = json::array();
      for (const Crossing& x : report.crossings) rays.push_back(io::to_json(orthogonal_ray(c.s(), x.wall.normal)));
      out["rays"] = rays;
    }
#ifdef MUKAI_CLI_ORACLE
    if (c.oracle && v.rank >= 2) {
      std::map<std::vector<long>, Rational> mine;
      for (const Crossing& x : report.crossings) mine[flat_normal(x.wall.normal)] = x.t;
      const long box = oracle_box(c);
      out["oracle_region"] = {{"box", box}, {"agrees", mine == oracle::walls_on_segment(c.s(), from, to, v, box)}};
    }
#endif
  }
  if (!c.root.has("h") && !c.root.has("region")) c.root.fail("walls needs \"h\" or \"region\"");
  return out;
}

json chamber_report(const Context& c) {
  const MukaiVector v = c.v();
  const RatVector h = c.divisor("h");
  const bool general = is_general(c.s(), h, v);
  json out{{"command", "chamber"},
           {"v", io::to_json(v)},
           {"h", io::to_json(h)},
           {"general", general},
           {"walls_through_h", io::to_json(walls_at(c.s(), h, v))}};
  if (!general) {
    const std::optional<RatVector> toward = c.optional_divisor("toward");
    out["general_neighbor"] = io::to_json(toward ? general_neighbor(c.s(), h, v, *toward) : general_neighbor(c.s(), h, v));
  }
  return out;
}

json stability_report(const Context& c) {
  const NumericalSheaf f = io::read_sheaf(c.root["sheaf"], c.s());
  const Node list = c.root["subs"];
  std::vector<NumericalSheaf> subs;
  for (std::size_t i = 0; i < list.size(); ++i) subs.push_back(io::read_sheaf(list[i], c.s()));
  const RatVector h = c.divisor("h");
  const RatVector a = c.divisor("a");
  json out{{"command", "classify"},
           {"mode", "stability"},
           {"sheaf", io::to_json(f)},
           {"h", io::to_json(h)},
           {"a", io::to_json(a)},
           {"verdict", io::to_json(classify_destab(c.s(), f, subs, h, a))}};
  if (f.rank.sign() > 0) {
    const HilbertPolynomials p = hilbert2(c.s(), f, h, a);
    out["reduced_polynomial"] = io::to_json(p.reduced);
  }
  return out;
}

json classify_report(const Context& c) {
  if (c.root.has("sheaf")) return stability_report(c);
  const MukaiVector v = c.v();
  const RatVector h = c.divisor("h");
  return {{"command", "classify"}, {"mode", "moduli"}, {"report", io::to_json(classify(c.s(), v, h))}};
}

json analyze_report(const Context& c) {
  const MukaiVector v = c.v();
  const RatVector h = c.divisor("h");
  const ClassificationReport report = classify(c.s(), v, h);
  json out{{"command", "analyze"},
           {"surface", io::to_json(c.s())},
           {"h", io::to_json(h)},
           {"classification", io::to_json(report)}};
  if (v.rank.sign() > 0) {
    const MukaiVector& w = report.primitive;
    out["existence_gate"] = io::to_json(existence_gate(c.s(), w, h));
    std::optional<RatVector> a = c.optional_divisor("a");
    if (!a) a = is_general(c.s(), h, w) ? h : general_neighbor(c.s(), h, w);
    json deformation{{"a", io::to_json(*a)}};
    try {
      const DeformationResult d = deformation_class(c.s(), w, h, *a);
      deformation["class"] = d.hilb ? json{{"type", "HilbK3"}, {"n", io::to_json(d.hilb->n)}} : json(nullptr);
      deformation["note"] = d.note;
    } catch (const DomainError& e) {
      deformation["class"] = nullptr;
      deformation["note"] = e.what();
    }
    out["deformation"] = deformation;
  }
  return out;
}

json decompose_report(const Context& c) {
  const MukaiVector v = c.v();
  const RatVector h = c.divisor("h");
  const Integer box = c.root.has("bounds") ? c.root["bounds"]["max_abs"].integer() : Integer(3);
  if (box.sign() < 0) c.root["bounds"]["max_abs"].fail("bound must be nonnegative");
  const auto candidates = enumerate_decompositions(c.s(), v, h, {box});
  json list = json::array();
  for (const auto& d : candidates) {
    json j = io::to_json(d);
    j["shape"] = io::to_json(terminalisation_shape(c.s(), d, h));
    list.push_back(j);
  }
  json out{{"command", "decompose"},
           {"v", io::to_json(v)},
           {"h", io::to_json(h)},
           {"max_abs", io::to_json(box)},
           {"candidates", list}};
#ifdef MUKAI_CLI_ORACLE
  if (c.oracle) {
    std::set<std::vector<std::pair<long, std::vector<long>>>> mine;
    for (const auto& d : candidates) {
      std::vector<std::pair<long, std::vector<long>>> parts;
      for (const auto& p : d.parts) {
        std::vector<long> flat{p.v.rank.convert_to<long>()};
        for (Eigen::Index i = 0; i < p.v.c1.size(); ++i) flat.push_back(p.v.c1[i].convert_to<long>());
        flat.push_back(p.v.v2.convert_to<long>());
        parts.emplace_back(p.n.convert_to<long>(), flat);
      }
      mine.insert(parts);
    }
    out["oracle"] = {{"agrees", mine == oracle::decompositions(c.s(), v, h, box.convert_to<long>())}};
  }
#endif
  return out;
}

json filtration_report(const Context& c) {
  const Node list = c.root["graded"];
  std::vector<NumericalSheaf> graded;
  for (std::size_t i = 0; i < list.size(); ++i) {
    graded.push_back(io::read_sheaf(list[i], c.s()));
    if (graded.back().rank.sign() <= 0) list[i]["rank"].fail("graded pieces need positive rank");
  }
  if (graded.empty()) list.fail("at least one graded piece is needed");
  const RatVector h = c.divisor("h");
  json out{{"command", "check-filtration"}, {"h", io::to_json(h)}};
  out["report"] = io::to_json(filtration_checks(c.s(), graded, h));
  return out;
}

struct Plot {
  json summary;
  std::string svg;
};

Plot plot_cone(const Context& c) {
  if (c.s().picard_rank() != 2) throw UnsupportedError("plot-cone needs Picard rank 2");
  const MukaiVector v = c.v();
  const auto [from, to] = c.region();
  svg::ConePlot plot{wall_rays(c.s(), v, from, to), c.optional_divisor("h"), c.optional_divisor("a"), from, to};
  json rays = json::array();
  for (const IntVector& r : plot.wall_rays) rays.push_back(io::to_json(r));
  return {{{"command", "plot-cone"}, {"wall_count", plot.wall_rays.size()}, {"rays", rays}},
          svg::cone_svg(c.s(), plot)};
}

json diagnostic(const std::string& kind, const std::string& path, const std::string& message) {
  json d{{"class", kind}, {"message", message}};
  d["path"] = path.empty() ? json(nullptr) : json(path);
  return {{"error", d}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"analyze", "walls",           "chamber",  "phi",
                                              "classify", "decompose",      "check-filtration", "plot-cone"};
  return names;
}

bool oracle_available() {
#ifdef MUKAI_CLI_ORACLE
  return true;
#else
  return false;
#endif
}

Result run_command(const std::string& input, const Options& options) {
  Result result;
  try {
    json doc;
    try {
      doc = json::parse(input);
    } catch (const json::parse_error& e) {
      throw io::ParseError("", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw io::ParseError("", "document must be a JSON object");
    Context c{doc, Node(doc, ""), std::nullopt, options.oracle};
    if (options.oracle && !oracle_available()) throw UnsupportedError("this build has no oracle mode");

    std::string command = options.command;
    if (command.empty()) command = c.root["command"].string();
    if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
      throw io::ParseError(options.command.empty() ? "/command" : "", "unknown command \"" + command + "\"");

    if (command != "phi" || c.root.has("surface")) c.surface = io::read_surface(c.root["surface"]);

    json report;
    if (command == "phi") report = phi_table(c);
    else if (command == "walls") report = walls_report(c);
    else if (command == "chamber") report = chamber_report(c);
    else if (command == "classify") report = classify_report(c);
    else if (command == "analyze") report = analyze_report(c);
    else if (command == "decompose") report = decompose_report(c);
    else if (command == "check-filtration") report = filtration_report(c);
    else {
      Plot plot = plot_cone(c);
      result.svg = plot.svg;
      report = plot.summary;
    }
    result.out = report.dump(2) + "\n";
  } catch (const io::ParseError& e) {
    result = {Parse, "", diagnostic("parse", e.path(), e.what()).dump(2) + "\n"};
  } catch (const io::HypothesisError& e) {
    result = {Domain, "", diagnostic("domain", e.path(), e.what()).dump(2) + "\n"};
  } catch (const InputError& e) {
    result = {Parse, "", diagnostic("input", "", e.what()).dump(2) + "\n"};
  } catch (const DomainError& e) {
    result = {Domain, "", diagnostic("domain", "", e.what()).dump(2) + "\n"};
  } catch (const UnsupportedError& e) {
    result = {Unsupported, "", diagnostic("unsupported", "", e.what()).dump(2) + "\n"};
  } catch (const std::exception& e) {
    result = {Internal, "", diagnostic("internal", "", e.what()).dump(2) + "\n"};
  }
  return result;
}

}  // namespace mukai::cli
