#pragma once

// Rebuilding library inputs from a problem file and a command's arguments.
// Used both to run a command and to re-verify its certificate.

#include "chaincert/commands.hpp"

namespace chaincert::detail {

class Args {
 public:
  Args(const ProblemFile& problem, Json args, std::string command)
      : problem_(problem), args_(std::move(args)), path_("command_args." + command) {}

  const ProblemFile& problem() const { return problem_; }
  const Json& json() const { return args_; }
  Json& json() { return args_; }
  bool has(const std::string& key) const { return args_.contains(key) && !args_.at(key).is_null(); }
  std::string name(const std::string& key) const { return string_field(args_, key, path_); }
  int integer(const std::string& key) const { return int_field(args_, key, path_); }
  std::vector<Vertex> vertices(const std::string& key) const {
    return parse_vertex_list(field(args_, key, path_), path_ + "." + key);
  }

  const ComplexRef& complex(const std::string& key) const;
  const SimplicialMap& map(const std::string& key) const;
  const NamedTower& tower(const std::string& key) const;
  const NamedCover& cover(const std::string& key) const;
  const ChainMorphism& morphism(const std::string& key) const;
  const ChainHomotopy& homotopy(const std::string& key) const;

 private:
  const ProblemFile& problem_;
  Json args_;
  std::string path_;

 public:
  const std::string& path() const { return path_; }
};

RealizationProblem realization_inputs(const Args& a);
HomotopyProblem homotopy_inputs(const Args& a);
DugundjiProblem dugundji_inputs(const Args& a);

struct LiftInputs {
  ComplexRef k, l;
  ChainMorphism phi_l, phi;
  SimplicialMap f;
  FiltrationTower tower;
};
LiftInputs lift_inputs(const Args& a);

struct NerveInputs {
  ComplexRef y;
  Cover cover;
  SimplicialMap f;
  FiltrationTower tower;
};
NerveInputs nerve_inputs(const Args& a);

/// Map and tower for check-uvn (map mode) and check-lcn; the identity of the
/// tower's complex for check-lcn.
struct UvnInputs {
  SimplicialMap f;
  FiltrationTower tower;
};
UvnInputs uvn_map_inputs(const Args& a, bool identity);

}  // namespace chaincert::detail
