#include "mpp/io.hpp"

#include "mpp/errors.hpp"

namespace mpp::io {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidParameter(std::string("missing JSON field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InvalidParameter(std::string("bad JSON field \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json to_json(const RationalVector& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_fraction_string(v));
  return out;
}

RationalVector rationals_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidParameter("expected an array of \"p/q\" strings");
  RationalVector out;
  for (const auto& v : j) {
    if (!v.is_string()) throw InvalidParameter("expected a \"p/q\" string");
    out.push_back(parse_rational(v.get<std::string>()));
  }
  return out;
}

Json to_json(const MonotonePath& path) {
  Json supports = Json::array();
  for (const auto& s : path.supports()) supports.push_back(s.elems());
  return {{"n", path.n()}, {"k", path.k()}, {"supports", supports}};
}

MonotonePath path_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  const int k = field<int>(j, "k");
  std::vector<Support> supports;
  for (auto& elems : field<std::vector<std::vector<int>>>(j, "supports")) supports.emplace_back(n, std::move(elems));
  return MonotonePath(n, k, std::move(supports));
}

Json to_json(const EnhancedStep& step) { return {{"x", step.x}, {"y", step.y}, {"Z", step.common}}; }

EnhancedStep step_from_json(const Json& j) {
  return {field<int>(j, "x"), field<int>(j, "y"), field<std::vector<int>>(j, "Z")};
}

Json to_json(const LatticePath& path) {
  return {{"n", path.n()}, {"k", path.k()}, {"points", path.points()}};
}

LatticePath lattice_from_json(const Json& j) {
  return LatticePath(field<int>(j, "n"), field<int>(j, "k"), field<std::vector<LatticePoint>>(j, "points"));
}

Json to_json(const CoherenceCertificate& certificate) {
  Json out = {{"coherent", certificate.coherent}};
  if (certificate.coherent && certificate.witness) out["omega"] = to_json(*certificate.witness);
  return out;
}

CoherenceCertificate certificate_from_json(const Json& j) {
  CoherenceCertificate out{field<bool>(j, "coherent"), std::nullopt};
  if (j.contains("omega")) out.witness = rationals_from_json(j.at("omega"));
  return out;
}

std::string support_label(const Support& support) {
  const bool compact = support.n() <= 9;
  std::string out;
  for (int e : support.elems()) {
    if (!compact && !out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out << f;
      continue;
    }
    out << '"';
    for (char ch : f) {
      if (ch == '"') out << '"';
      out << ch;
    }
    out << '"';
  }
  out << '\n';
}

}  // namespace mpp::io
