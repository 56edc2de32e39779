// Copyright 2026 The ratbase Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ratbase/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ratbase/errors.hpp"

namespace ratbase::io {
namespace {

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string StringField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<Vector> VectorList(const Json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<Vector> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(VectorFromJson(j[k], dim, what + "[" + std::to_string(k) + "]"));
  }
  return out;
}

}  // namespace

Json ToJson(const Rat& value) { return ToString(value); }

Json ToJson(std::span<const Rat> v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(ToJson(x));
  return out;
}

Json ToJson(std::span<const Vector> vs) {
  Json out = Json::array();
  for (const Vector& v : vs) out.push_back(ToJson(v));
  return out;
}

Rat RatFromJson(const Json& j, std::string_view where) {
  if (!j.is_string()) throw ParseError(std::string(where) + ": rationals must be strings such as \"-3/5\"");
  try {
    return ParseRat(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(std::string(where) + ": " + e.what());
  }
}

Vector VectorFromJson(const Json& j, std::size_t dim, std::string_view where) {
  if (!j.is_array()) throw ParseError(std::string(where) + " must be an array");
  if (j.size() != dim) {
    throw ParseError(std::string(where) + " has " + std::to_string(j.size()) + " coordinates, expected " +
                     std::to_string(dim));
  }
  Vector out;
  for (std::size_t k = 0; k < dim; ++k) {
    out.push_back(RatFromJson(j[k], std::string(where) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

RawSpace ParseRawSpace(std::string_view text) {
  Json j = ParseJson(text);
  RawSpace raw;
  raw.name = j.is_object() && j.contains("name") ? StringField(j, "name") : "";
  const Json& basis = Field(j, "basis");
  if (!basis.is_array() || basis.empty()) throw ParseError("basis must be a nonempty array of labels");
  std::set<std::string> seen;
  for (const Json& label : basis) {
    if (!label.is_string() || label.get<std::string>().empty()) throw ParseError("labels must be nonempty strings");
    if (!seen.insert(label.get<std::string>()).second) {
      throw ParseError("duplicate label '" + label.get<std::string>() + "'");
    }
    raw.basis.push_back(label.get<std::string>());
  }
  raw.vertices = VectorList(Field(j, "vertices"), raw.basis.size(), "vertices");
  if (j.contains("facets")) raw.facets = VectorList(j["facets"], raw.basis.size(), "facets");
  return raw;
}

BasedSpace BuildSpace(const RawSpace& raw) {
  Ball ball = Ball::FromPoints(raw.vertices, raw.basis.size());
  if (raw.facets) {
    std::vector<Vector> listed = *raw.facets;
    for (const Vector& f : *raw.facets) listed.push_back(Negate(f));
    std::sort(listed.begin(), listed.end());
    listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
    if (listed != ball.Facets()) throw ValidationFailed("listed facets differ from the facets of the vertex hull");
  }
  return BasedSpace(raw.basis, ball, raw.name);
}

BasedSpace ParseSpace(std::string_view text) { return BuildSpace(ParseRawSpace(text)); }

Json SpaceToJson(const BasedSpace& space, bool with_facets) {
  Json j;
  j["name"] = space.name();
  j["basis"] = space.labels();
  j["vertices"] = ToJson(space.ball().vertices());
  if (with_facets) j["facets"] = ToJson(space.ball().Facets());
  return j;
}

std::string SerializeSpace(const BasedSpace& space, bool with_facets) {
  return SpaceToJson(space, with_facets).dump(2) + "\n";
}

MorphismFile ParseMorphismFile(std::string_view text) {
  Json j = ParseJson(text);
  MorphismFile out{StringField(j, "domain"), StringField(j, "codomain"), {}};
  const Json& map = Field(j, "basis_map");
  if (!map.is_object()) throw ParseError("basis_map must be an object from labels to labels");
  for (auto it = map.begin(); it != map.end(); ++it) {
    if (!it.value().is_string()) throw ParseError("basis_map values must be label strings");
    out.basis_map.emplace_back(it.key(), it.value().get<std::string>());
  }
  return out;
}

std::string SerializeMorphismFile(const MorphismFile& file) {
  Json j;
  j["domain"] = file.domain;
  j["codomain"] = file.codomain;
  Json map = Json::object();
  for (const auto& [from, to] : file.basis_map) map[from] = to;
  j["basis_map"] = map;
  return j.dump(2) + "\n";
}

MorphismFile ToMorphismFile(const BasedMorphism& f, std::string domain, std::string codomain) {
  return {std::move(domain), std::move(codomain), f.LabelPairs()};
}

BasedMorphism ResolveMorphism(const MorphismFile& file, const BasedSpace& domain, const BasedSpace& codomain) {
  std::map<std::string, std::string> map;
  for (const auto& [from, to] : file.basis_map) {
    if (!domain.Find(from)) throw ParseError("basis_map: '" + from + "' is not a label of the domain");
    if (!codomain.Find(to)) throw ParseError("basis_map: '" + to + "' is not a label of the codomain");
    map[from] = to;
  }
  if (map.size() != domain.dim()) throw ParseError("basis_map must map every domain label exactly once");
  return BasedMorphism::FromLabels(domain, codomain, map);
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

BasedSpace ReadSpaceFile(const std::filesystem::path& path) {
  try {
    return ParseSpace(ReadTextFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

BasedMorphism ReadMorphismFile(const std::filesystem::path& path) {
  MorphismFile file = ParseMorphismFile(ReadTextFile(path));
  const std::filesystem::path dir = path.parent_path();
  return ResolveMorphism(file, ReadSpaceFile(dir / file.domain), ReadSpaceFile(dir / file.codomain));
}

}  // namespace ratbase::io
