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

// JSON serialization of spaces and morphisms. Rationals are strings "p/q"
// ("p" when q = 1); floats are rejected.
//
// Space file:
//   {"name": "...", "basis": ["e1", ...], "vertices": [["1", "-1/2"], ...],
//    "facets": [...]}            // facets optional
// Morphism file:
//   {"domain": "z.json", "codomain": "x.json", "basis_map": {"e1": "e2"}}
// where domain and codomain are paths relative to the morphism file.

#ifndef RATBASE_IO_HPP_
#define RATBASE_IO_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratbase/morphism.hpp"
#include "ratbase/space.hpp"

namespace ratbase::io {

using Json = nlohmann::ordered_json;

Json ToJson(const Rat& value);
Json ToJson(std::span<const Rat> v);
Json ToJson(std::span<const Vector> vs);

/// Throws ParseError naming `where` on anything but a rational string.
Rat RatFromJson(const Json& j, std::string_view where);
Vector VectorFromJson(const Json& j, std::size_t dim, std::string_view where);

/// The file contents before any geometry: vertices exactly as listed.
struct RawSpace {
  std::string name;
  std::vector<std::string> basis;
  std::vector<Vector> vertices;
  std::optional<std::vector<Vector>> facets;
};

RawSpace ParseRawSpace(std::string_view text);

/// Parses and builds the ball as the hull of the listed vertices and their
/// negatives. Throws ParseError on malformed input, NotFullDimensional when
/// the vertices do not span, and ValidationFailed when listed facets
/// disagree with the computed ones.
BasedSpace BuildSpace(const RawSpace& raw);
BasedSpace ParseSpace(std::string_view text);

Json SpaceToJson(const BasedSpace& space, bool with_facets = false);
/// Pretty-printed with a trailing newline; parse then serialize is the
/// identity on such output.
std::string SerializeSpace(const BasedSpace& space, bool with_facets = false);

struct MorphismFile {
  std::string domain;
  std::string codomain;
  std::vector<std::pair<std::string, std::string>> basis_map;
};

MorphismFile ParseMorphismFile(std::string_view text);
std::string SerializeMorphismFile(const MorphismFile& file);
MorphismFile ToMorphismFile(const BasedMorphism& f, std::string domain, std::string codomain);
/// Throws ParseError for unknown labels, NotInjective for collisions.
BasedMorphism ResolveMorphism(const MorphismFile& file, const BasedSpace& domain, const BasedSpace& codomain);

/// Throws ParseError when the file cannot be read or written.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

BasedSpace ReadSpaceFile(const std::filesystem::path& path);
/// Loads the morphism and the two spaces it references.
BasedMorphism ReadMorphismFile(const std::filesystem::path& path);

}  // namespace ratbase::io

#endif  // RATBASE_IO_HPP_
