#pragma once

// JSON documents for the command-line front end. Integers are JSON numbers
// (strings when they do not fit in 64 bits); rationals are "p/q" strings.

#include "mukai/decomposition.hpp"
#include "mukai/filtration.hpp"
#include "mukai/stability.hpp"

#include <json.hpp>

namespace mukai::io {

using json = nlohmann::json;

/// Malformed document; `path` is a JSON pointer to the offending field.
class ParseError : public InputError {
 public:
  ParseError(std::string path, const std::string& message)
      : InputError(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Well-formed field whose value violates a mathematical precondition.
class HypothesisError : public DomainError {
 public:
  HypothesisError(std::string path, const std::string& message)
      : DomainError(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A JSON value together with its pointer inside the document.
class Node {
 public:
  Node(const json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const json& value() const { return *value_; }
  const std::string& path() const { return path_; }

  bool has(const std::string& key) const;
  Node operator[](const std::string& key) const;  ///< required member
  Node operator[](std::size_t index) const;
  std::size_t size() const;                        ///< array length

  Integer integer() const;
  Rational rational() const;
  int small_int() const;
  std::string string() const;
  IntVector int_vector(std::optional<Eigen::Index> length = std::nullopt) const;
  RatVector rat_vector(std::optional<Eigen::Index> length = std::nullopt) const;

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void violate(const std::string& message) const;

 private:
  const json* value_;
  std::string path_;
};

Surface read_surface(const Node& node);
MukaiVector read_mukai_vector(const Node& node, const Surface& surface);
NumericalSheaf read_sheaf(const Node& node, const Surface& surface);
RatVector read_class(const Node& node, const Surface& surface);

json to_json(const Integer& x);
json to_json(const Rational& x);
json to_json(const IntVector& x);
json to_json(const RatVector& x);
json to_json(const MukaiVector& v);
json to_json(const NumericalSheaf& e);
json to_json(const Surface& s);
json to_json(const Wall& w);
json to_json(const std::vector<Wall>& walls);
json to_json(const SegmentWallReport& r);
json to_json(const Poly2& p);
json to_json(const StabilityVerdict& v);
json to_json(const ClassificationReport& r);
json to_json(const DecompositionCandidate& d);
json to_json(const TerminalisationShape& t);
json to_json(const FiltrationReport& r);
json to_json(const GateResult& g);

}  // namespace mukai::io
