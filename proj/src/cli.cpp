#include "gds/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "gds/autos.hpp"
#include "gds/error.hpp"
#include "gds/example.hpp"
#include "gds/filtration.hpp"
#include "gds/io.hpp"
#include "gds/lnd.hpp"
#include "gds/parse.hpp"

namespace gds::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCapEnv = "GDS_NILPOTENCY_CAP";

struct Config {
  std::string surface_file;
  std::string modulus;
  std::string f;
  std::string phi;
  long cap = kDefaultNilpotencyCap;
  std::string output = "text";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render_text(std::ostream& out, const Json& result, const std::string& prefix = {}) {
  if (prefix.empty() && result.size() == 1 && result.contains("value")) {
    out << scalar_text(result["value"]) << "\n";
    return;
  }
  for (const auto& [key, v] : result.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      render_text(out, v, name);
    } else {
      out << name << ": " << scalar_text(v) << "\n";
    }
  }
}

Json morphism_json(const Morphism& m) {
  Json j;
  if (m.word()) j["word"] = word_to_string(*m.word());
  j["x"] = m.tx().to_string();
  j["y"] = m.ty().to_string();
  j["z"] = m.tz().to_string();
  return j;
}

Json report_json(const InvariantsReport& r) {
  Json j;
  j["ML"] = r.ml_invariant;
  j["HD"] = r.hd_invariant;
  j["witness"] = {{"dx", r.witness.dx().to_string()},
                  {"dy", r.witness.dy().to_string()},
                  {"dz", r.witness.dz().to_string()}};
  j["witness_well_defined"] = r.witness_well_defined;
  j["witness_h"] = r.witness_h.to_string();
  j["mechanism"] = "classify-lnd: every LND is h(x)*D for the witness D";
  j["sample_size"] = r.sample_size;
  j["sample_in_kernel"] = r.sample_in_kernel;
  j["sample_in_kx"] = r.sample_in_kx;
  j["kernel_mismatches"] = r.kernel_mismatches;
  j["y_nilpotency_index"] = r.y_nilpotency ? Json(*r.y_nilpotency) : Json(nullptr);
  j["verified"] = r.verified();
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv(kCapEnv)) {
    try {
      cfg.cap = std::stol(env);
    } catch (const std::exception&) {
      err << "usage error: " << kCapEnv << " must be an integer\n";
      return 2;
    }
  }

  CLI::App app{"Exact algebra on B = K[X,Y,Z]/(f(X)Y - phi(X,Z))", "gds"};
  app.require_subcommand(1);
  app.add_option("--surface", cfg.surface_file, "Surface spec JSON {modulus, f, phi}");
  app.add_option("--modulus", cfg.modulus, "Field modulus m(t), overrides the surface file");
  app.add_option("--f", cfg.f, "f(X) given inline");
  app.add_option("--phi", cfg.phi, "phi(X,Z) given inline");
  app.add_option("--cap", cfg.cap, std::string("Nilpotency iteration cap (env ") + kCapEnv + ")");
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));

  // Each subcommand fills `result`; the dispatcher renders it.
  Json result;
  std::function<void()> action;
  int exit_code = 0;

  auto field = [&]() { return cfg.modulus.empty() ? Field::rationals() : parse_modulus(cfg.modulus); };
  auto surface = [&]() -> Surface {
    if (!cfg.surface_file.empty()) return io::load_surface(cfg.surface_file, cfg.modulus);
    if (cfg.f.empty() || cfg.phi.empty()) throw UsageError("no surface given: use --surface FILE or --f/--phi");
    const FieldPtr k = field();
    return make_surface(k, parse_poly(k, cfg.f), parse_poly(k, cfg.phi));
  };
  auto element = [&](const Surface& s, const std::string& text) { return normalize(s, parse_poly(s->field(), text)); };

  std::string arg1, arg2, spec_file;
  bool canonical = false;
  long mu = 1, nu = 0;

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form in B");
  normalize_cmd->add_option("poly", arg1)->required();
  normalize_cmd->callback([&] {
    action = [&] { result["value"] = element(surface(), arg1).to_string(); };
  });

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression in B");
  eval_cmd->add_option("expr", arg1)->required();
  eval_cmd->callback([&] {
    action = [&] {
      const BElement b = element(surface(), arg1);
      result["value"] = b.to_string();
      const auto kx = in_kx(b);
      result["in_kx"] = kx.has_value();
    };
  });

  auto* derive_cmd = app.add_subcommand("derive", "Apply a derivation");
  auto* canon_flag = derive_cmd->add_flag("--canonical", canonical, "Use the canonical D (default)");
  derive_cmd->add_option("--spec", spec_file, "Derivation spec JSON {dx, dy, dz}")->excludes(canon_flag);
  derive_cmd->add_option("elem", arg1)->required();
  derive_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      const Derivation D = spec_file.empty() ? canonical_D(s) : io::load_derivation(s, spec_file);
      result["value"] = apply(D, element(s, arg1)).to_string();
    };
  });

  auto* classify_cmd = app.add_subcommand("classify-lnd", "Classify a derivation spec");
  classify_cmd->add_option("file", arg1)->required();
  classify_cmd->callback([&] {
    action = [&] {
      const LndClass c = classify_lnd(io::load_derivation(surface(), arg1));
      result["class"] = std::string(to_string(c.kind));
      if (c.h) result["h"] = c.h->to_string();
      if (!c.reason.empty()) result["reason"] = c.reason;
    };
  });

  auto* nil_cmd = app.add_subcommand("nilpotency", "Least n with D^n(elem) = 0");
  nil_cmd->add_option("--spec", spec_file, "Derivation spec JSON (default: canonical D)");
  nil_cmd->add_option("elem", arg1)->required();
  nil_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      const Derivation D = spec_file.empty() ? canonical_D(s) : io::load_derivation(s, spec_file);
      const auto n = nilpotency_index(D, element(s, arg1), static_cast<unsigned>(cfg.cap));
      result["index"] = n ? Json(*n) : Json(nullptr);
      result["cap"] = cfg.cap;
    };
  });

  auto* kernel_cmd = app.add_subcommand("kernel", "Membership in ker D = K[x]");
  kernel_cmd->add_option("elem", arg1)->required();
  kernel_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      const BElement b = element(s, arg1);
      result["in_kernel"] = kernel_member(canonical_D(s), b);
      result["normal_form"] = b.to_string();
    };
  });

  auto* inv_cmd = app.add_subcommand("invariants", "ML- and Derksen-invariant report");
  inv_cmd->callback([&] { action = [&] { result = report_json(invariants_report(surface())); }; });

  auto* auto_cmd = app.add_subcommand("auto", "Automorphisms generated by H, T, R, S");
  auto_cmd->require_subcommand(1);
  auto* make_cmd = auto_cmd->add_subcommand("make", "Build one generator");
  make_cmd->add_option("descriptor", arg1)->required();
  make_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      result = morphism_json(make_generator(s, parse_generator(s->field(), arg1)));
    };
  });
  auto* apply_cmd = auto_cmd->add_subcommand("apply", "Apply a word to an element");
  apply_cmd->add_option("word", arg1)->required();
  apply_cmd->add_option("elem", arg2)->required();
  apply_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      result["value"] = apply(from_word(s, parse_word(s->field(), arg1)), element(s, arg2)).to_string();
    };
  });
  auto* compose_cmd = auto_cmd->add_subcommand("compose", "Images of a composed word");
  compose_cmd->add_option("word", arg1)->required();
  compose_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      result = morphism_json(from_word(s, parse_word(s->field(), arg1)));
    };
  });
  auto* invert_cmd = auto_cmd->add_subcommand("invert", "Inverse of a word");
  invert_cmd->add_option("word", arg1)->required();
  invert_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      result = morphism_json(invert(from_word(s, parse_word(s->field(), arg1))));
    };
  });
  auto* equal_cmd = auto_cmd->add_subcommand("equal", "Compare two words by their images");
  equal_cmd->add_option("word1", arg1)->required();
  equal_cmd->add_option("word2", arg2)->required();
  equal_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      result["value"] = morphism_equal(from_word(s, parse_word(s->field(), arg1)),
                                       from_word(s, parse_word(s->field(), arg2)));
    };
  });

  auto* unity_cmd = app.add_subcommand("decompose-unity", "Write g = X^i h(X^s) with s maximal");
  unity_cmd->add_option("poly", arg1)->required();
  unity_cmd->callback([&] {
    action = [&] {
      const UnityDecomposition u = unity_decompose(parse_poly(field(), arg1));
      result["i"] = u.i;
      result["s"] = u.s;
      result["h"] = u.h.to_string();
    };
  });

  auto* center_cmd = app.add_subcommand("center", "Remove the X^(r-1) and Z^(d-1) terms");
  center_cmd->callback([&] {
    action = [&] {
      const Centering c = center(surface());
      result["f"] = c.surface->f().to_string();
      result["phi"] = c.surface->phi().to_string();
      result["a"] = c.a.to_string();
      result["b"] = c.b.to_string();
    };
  });

  auto* fadic_cmd = app.add_subcommand("fadic", "Base-f expansion of a polynomial in X");
  fadic_cmd->add_option("poly", arg1)->required();
  fadic_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      Json digits = Json::object();
      for (const auto& [n, g] : fadic_expand(s, parse_poly(s->field(), arg1)).digits) {
        digits[std::to_string(n)] = g.to_string();
      }
      result["digits"] = digits;
    };
  });

  auto* weight_cmd = app.add_subcommand("weight", "Weight of an element under (mu, nu)");
  auto* leading_cmd = app.add_subcommand("leading", "Leading form under (mu, nu)");
  for (auto* cmd : {weight_cmd, leading_cmd}) {
    cmd->add_option("--mu", mu, "Weight of x (>= 1)")->required();
    cmd->add_option("--nu", nu, "Weight of z")->required();
    cmd->add_option("elem", arg1)->required();
  }
  weight_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      result["value"] = weight(embed_in_T(element(s, arg1)), {mu, nu});
    };
  });
  leading_cmd->callback([&] {
    action = [&] {
      const Surface s = surface();
      result["value"] = leading_form(embed_in_T(element(s, arg1)), {mu, nu}).to_string();
    };
  });

  auto* example_cmd = app.add_subcommand("example-check", "Reproduce the worked H example and diff goldens");
  example_cmd->callback([&] {
    action = [&] {
      const example::CheckResult c = example::run_check();
      result["status"] = c.passed() ? "PASS" : "FAIL";
      result["H(x)"] = "X";
      result["H(z)"] = c.hz;
      result["H(y)"] = c.hy;
      result["relation_residue"] = c.residue;
      result["H(z)_matches_published"] = c.hz_matches_published;
      result["H(y)_matches_golden"] = c.hy_matches_golden;
      result["published_H(y)"] =
          c.hy_matches_published ? std::string("match") : "mismatch (informational): " + c.published_hy_difference;
      if (!c.passed()) exit_code = 1;
    };
  });

  const bool json_errors = [&] {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] == "--output" && args[i + 1] == "json") return true;
    }
    return false;
  }();
  auto report = [&](std::string_view kind, const std::string& message, int code) {
    if (json_errors) {
      out << Json{{"error", kind}, {"message", message}}.dump(2) << "\n";
    }
    err << message << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (cfg.cap < 1) throw UsageError("--cap must be >= 1");
    if (!action) throw UsageError("no command given");
    action();
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    return report("UsageError", std::string("usage error: ") + e.what(), 2);
  } catch (const ParseError& e) {
    return report("ParseError", e.what(), 2);
  } catch (const Error& e) {
    return report(to_string(e.kind()), e.what(), 1);
  }

  if (cfg.output == "json") {
    out << result.dump(2) << "\n";
  } else {
    render_text(out, result);
  }
  return exit_code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace gds::cli
