#include "gds/io.hpp"

#include <fstream>
#include <sstream>

#include "gds/error.hpp"
#include "gds/parse.hpp"

namespace gds::io {

namespace {

std::string string_field(const nlohmann::json& j, const char* key, const char* fallback = nullptr) {
  if (!j.is_object()) throw ParseError("expected a JSON object", 1, 1);
  auto it = j.find(key);
  if (it == j.end()) {
    if (fallback) return fallback;
    throw ParseError(std::string("missing field '") + key + "'", 1, 1);
  }
  if (!it->is_string()) throw ParseError(std::string("field '") + key + "' must be a string", 1, 1);
  return it->get<std::string>();
}

// Re-throws parse errors inside a field with the field name attached.
template <class Fn>
auto in_field(const char* key, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(std::string("in field '") + key + "': " + e.detail().substr(e.detail().find(": ") + 2),
                     e.line(), e.column());
  }
}

}  // namespace

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(path.string() + ": malformed JSON", line, col);
  }
}

Surface surface_from_json(const nlohmann::json& j, const std::string& modulus_override) {
  const std::string modulus = modulus_override.empty() ? string_field(j, "modulus", "t") : modulus_override;
  const FieldPtr k = in_field("modulus", [&] { return parse_modulus(modulus); });
  const Poly f = in_field("f", [&] { return parse_poly(k, string_field(j, "f")); });
  const Poly phi = in_field("phi", [&] { return parse_poly(k, string_field(j, "phi")); });
  return make_surface(k, f, phi);
}

Surface load_surface(const std::filesystem::path& path, const std::string& modulus_override) {
  return surface_from_json(read_json_file(path), modulus_override);
}

nlohmann::json surface_to_json(const Surface& s) {
  return {{"modulus", s->field()->to_string()}, {"f", s->f().to_string()}, {"phi", s->phi().to_string()}};
}

Derivation derivation_from_json(const Surface& s, const nlohmann::json& j) {
  auto elem = [&](const char* key) {
    return in_field(key, [&] { return normalize(s, parse_poly(s->field(), string_field(j, key))); });
  };
  return make_derivation(s, elem("dx"), elem("dy"), elem("dz"));
}

Derivation load_derivation(const Surface& s, const std::filesystem::path& path) {
  return derivation_from_json(s, read_json_file(path));
}

}  // namespace gds::io
