#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "torsion/classify_an.hpp"
#include "torsion/classify_tube.hpp"
#include "torsion/torsion_core.hpp"

namespace torsion::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "torsion/1";

// Raised for JSON that does not describe a well-formed certificate.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Quiver& q);
json to_json(const PartPartition& p);
PartPartition partition_from_json(const json& j);
json vertices_to_json(const VertexSet& s);
VertexSet vertices_from_json(const json& j);

json intervals_to_json(const Category& cat, ObjectSet s);
json pair_to_json(const Category& cat, const TorsionPair& tp);
json ntp_to_json(const Category& cat, const NTorsionPair& t);
json to_json(const Category& cat, const an::DecompositionResult& d);

json to_json(const tube::TubeModule& x);
json to_json(const tube::TubeSubcatDescriptor& d);
json to_json(const tube::TubeTorsionPair& p);
tube::TubeSubcatDescriptor descriptor_from_json(const json& j, int rank);

struct LinearCertificate {
  int n = 0;
  std::optional<VertexSet> support;
  bool is_ntp = false;
  // {torsion, free} for a pair, the parts in order for an n-torsion pair.
  std::vector<std::vector<an::Interval>> parts;
};

struct TubeCertificate {
  int rank = 0;
  std::optional<PartPartition> partition;
  std::optional<tube::TubeSubcatDescriptor> torsion;
  std::optional<tube::TubeSubcatDescriptor> free;
};

using Certificate = std::variant<LinearCertificate, TubeCertificate>;

Certificate parse_certificate(const json& j);
std::vector<Certificate> parse_certificates(const json& j);  // one object or an array

}  // namespace torsion::io
