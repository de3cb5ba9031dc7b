// Job files: one ambient ring plus named, verified objects.
//
//   ring 3;
//   poly conicF = x0*x1 + x1*x2 + x0*x2;
//   map sigmaF = [x1*x2 : x0*x2 : x0*x1];
//   birmap sigma = (sigmaF, sigmaF);
//   cone coneConic = cone(conicF);
//
// Declarations may reference earlier names only; birmaps are verified at
// load (cones get their vertex property checked), so commands never touch
// an uncertified object.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/cone.hpp"
#include "cremona/maps.hpp"

namespace cremona {

struct PrecheckOptions {
  std::uint64_t prime = 1048583;  // smallest prime above 2^20 would be 1048583
  int trials = 32;
};

struct Job {
  int ring = 0;  // variable count (P^{ring-1})
  std::map<std::string, Poly> polys;
  std::map<std::string, MapRep> maps;
  std::map<std::string, BirationalMap> birmaps;
  std::map<std::string, ConeWitness> cones;
  std::vector<std::string> load_notes;  // cofactors and vertices reported at load

  const Poly& poly(const std::string& name) const;
  const MapRep& map(const std::string& name) const;
  const BirationalMap& birmap(const std::string& name) const;
  const ConeWitness& cone(const std::string& name) const;
};

Job load_job_text(std::string_view text,
                  const std::optional<PrecheckOptions>& precheck = std::nullopt);
Job load_jobfile(const std::string& path,
                 const std::optional<PrecheckOptions>& precheck = std::nullopt);

}  // namespace cremona
