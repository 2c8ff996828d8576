#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "steincalc/invariants.hpp"
#include "steincalc/planarity.hpp"
#include "steincalc/relators.hpp"

namespace steincalc {

using Json = nlohmann::ordered_json;

struct CurveDecl {
  std::string name;
  IntVector homology;
  std::optional<std::vector<int>> hole_set;
  std::optional<int> rotation;
  std::optional<int> boundary_parallel_to;

  friend bool operator==(const CurveDecl&, const CurveDecl&) = default;
};

struct TwistDecl {
  std::string curve;
  int sign = 1;

  friend bool operator==(const TwistDecl&, const TwistDecl&) = default;
};

struct NamedWord {
  std::string name;
  std::vector<TwistDecl> twists;

  friend bool operator==(const NamedWord&, const NamedWord&) = default;
};

/// Either a built-in relator placed on document curves, or a user relator.
///   lantern:         roles a1 a2 a3 a4 a12 a23 a13
///   braid:           roles alpha beta gamma
///   r_ns:            roles alpha beta alpha1 alpha12 alpha13 alpha4' alpha12' alpha13'
///   chain:           chain = [c1..cn], boundary = [delta] or [delta1, delta2]
///   genus_boundary:  genus, boundary = the multicurve
struct RelatorDecl {
  std::string name;
  std::optional<std::string> builtin;
  std::map<std::string, std::string> roles;
  std::vector<std::string> chain;
  std::vector<std::string> boundary;
  std::optional<int> genus;
  std::vector<TwistDecl> left;
  std::vector<TwistDecl> right;
  std::optional<Int> I;

  friend bool operator==(const RelatorDecl&, const RelatorDecl&) = default;
};

struct DeclarationDecl {
  std::string name;
  int genus = 0;
  int boundary = 0;
  std::vector<std::string> multicurve;

  friend bool operator==(const DeclarationDecl&, const DeclarationDecl&) = default;
};

struct Document {
  int genus = 0;
  int boundary = 1;
  std::vector<CurveDecl> curves;
  std::vector<std::pair<std::string, std::string>> disjoint;
  std::vector<Arc> arcs;
  std::vector<NamedWord> words;
  std::vector<RelatorDecl> relators;
  std::vector<DeclarationDecl> declarations;
  std::vector<std::pair<std::string, Int>> baselines;
  std::vector<std::pair<std::string, std::vector<IntVector>>> meridians;

  friend bool operator==(const Document&, const Document&) = default;
};

/// A document resolved against its curve system.
struct Workspace {
  std::shared_ptr<const CurveSystem> system;
  std::vector<std::pair<std::string, Word>> words;
  RelatorDatabase relators;
  std::vector<BoundingDeclaration> declarations;
  std::map<std::string, Int> baselines;
  std::map<std::string, std::vector<HomologyClass>> meridians;
  std::optional<std::vector<Arc>> arcs;

  const Word& word(const std::string& name) const;  // throws PreconditionError
};

/// Parses and validates; throws ParseError carrying a JSON-pointer location.
Document parse_document(std::string_view text);
Document parse_document_json(const Json& j);
Json serialize(const Document& doc);

/// Resolves names and builds the relators; throws ParseError with a location.
Workspace build_workspace(const Document& doc);

/// Document for a curve system plus named words.
Document document_from(const CurveSystem& system);
std::vector<TwistDecl> twist_decls(const Word& w);

}  // namespace steincalc
