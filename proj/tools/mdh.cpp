#include "mdh/errors.hpp"
#include "mdh/generators.hpp"
#include "mdh/holder_complex.hpp"
#include "mdh/inner_homology.hpp"
#include "mdh/io.hpp"
#include "mdh/outer_homology.hpp"
#include "mdh/quotient.hpp"
#include "mdh/realization.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace mdh;
using io::json;

namespace {

struct Globals {
  std::string format = "json";
  unsigned seed = 0;
  std::size_t max_size = default_isomorphism_capacity;
  bool timing = false;
};

// Everything that feeds the digest: the normalized arguments and the bytes of
// every input file, in order.
struct Inputs {
  std::string material;

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    material += "file:" + std::to_string(data.size()) + ":" + data;
    return data;
  }
  json read_json(const std::string& path) { return io::parse(read(path)); }
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

Exponent exponent_arg(const std::string& s) { return Exponent::parse(s); }

std::vector<Exponent> exponent_list(const std::string& s) {
  std::vector<Exponent> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Exponent::parse(item));
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad integer '" + item + "'");
    }
  }
  return out;
}

// Result of one command, rendered in the requested format.
struct Output {
  json result;
  std::vector<std::string> assumptions;
  std::string csv;  // empty when CSV is not available
  std::string dot;  // empty when DOT is not available
};

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return "input error";
  if (dynamic_cast<const DomainError*>(&e)) return "domain error";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition error";
  if (dynamic_cast<const CoverageError*>(&e)) return "coverage error";
  if (dynamic_cast<const ArithmeticError*>(&e)) return "arithmetic error";
  if (dynamic_cast<const ConsistencyError*>(&e)) return "consistency error";
  if (dynamic_cast<const DegeneracyError*>(&e)) return "degeneracy error";
  if (dynamic_cast<const CapacityError*>(&e)) return "capacity error";
  if (dynamic_cast<const UnsupportedSizeError*>(&e)) return "unsupported size";
  return "error";
}

Output profile_output(const RankProfile& p, json result) {
  result["profile"] = io::to_json(p);
  return {result, {}, io::profile_to_csv(p), {}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moderately discontinuous homology of Holder complexes and surface germs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
  app.add_option("--seed", g.seed, "Seed for randomized generators");
  app.add_option("--max-size", g.max_size, "Vertex bound for isomorphism search");
  app.add_flag("--timing", g.timing, "Add wall-clock timing to JSON reports");

  Inputs inputs;
  std::function<Output()> run;

  // inner
  auto* inner = app.add_subcommand("inner", "Inner-metric MD-homology of a Holder complex");
  std::string inner_file, inner_b;
  int inner_degree = 1;
  bool inner_profile_flag = false, inner_trace = false;
  inner->add_option("complex", inner_file, "Complex JSON")->required();
  auto* inner_b_opt = inner->add_option("--b", inner_b, "Resolution p/q or inf");
  inner->add_flag("--profile", inner_profile_flag, "Full profile over b")->excludes(inner_b_opt);
  inner->add_option("--degree", inner_degree, "Homological degree");
  inner->add_flag("--trace", inner_trace, "Emit the b-reduction trace")->needs(inner_b_opt);
  inner->callback([&] {
    run = [&]() -> Output {
      const auto c = io::complex_from_json(inputs.read_json(inner_file));
      json result{{"degree", inner_degree}};
      if (inner_b.empty()) return profile_output(inner_profile(c, inner_degree), result);
      const auto b = exponent_arg(inner_b);
      const int rank = mdh_inner(c, b, inner_degree);
      result["b"] = io::to_json(b);
      result["rank"] = rank;
      if (inner_trace) {
        if (b.is_infinite()) throw DomainError("no reduction trace at b = inf");
        const auto simplified = simplify(c);
        result["simplified"] = io::to_json(simplified);
        result["trace"] = io::to_json(b_reduce(simplified, b).second);
      }
      return {result, {}, "b,degree,rank\n" + b.to_string() + "," + std::to_string(inner_degree) + "," +
                              std::to_string(rank) + "\n", {}};
    };
  });

  // outer
  auto* outer = app.add_subcommand("outer", "Outer-metric MD-homology of snake models");
  outer->require_subcommand(1);
  auto* outer_profile_cmd = outer->add_subcommand("profile", "Oracle profile of a link model");
  std::string model_file, snake_file;
  int outer_degree = 1;
  auto* model_opt = outer_profile_cmd->add_option("model", model_file, "Link model JSON");
  outer_profile_cmd->add_option("--from-snake", snake_file, "Snake JSON realized first")->excludes(model_opt);
  outer_profile_cmd->add_option("--degree", outer_degree, "Homological degree");
  outer_profile_cmd->callback([&] {
    run = [&]() -> Output {
      LinkModel m;
      if (!snake_file.empty()) {
        m = link_model_from_arcs(realize_snake_instance(io::snake_from_json(inputs.read_json(snake_file))));
      } else if (!model_file.empty()) {
        m = io::model_from_json(inputs.read_json(model_file));
      } else {
        throw InputError("give a model file or --from-snake");
      }
      auto out = profile_output(outer_profile(m, outer_degree), {{"degree", outer_degree}});
      out.result["model"] = io::to_json(m);
      out.assumptions = m.assumptions;
      return out;
    };
  });

  auto* target = outer->add_subcommand("target", "Snake realizing a prescribed profile");
  std::string ks_text, qs_text, target_beta = "1";
  target->add_option("--ks", ks_text, "k_1,...,k_m strictly increasing")->required();
  target->add_option("--qs", qs_text, "q_1,...,q_m strictly increasing")->required();
  target->add_option("--beta", target_beta, "Snake exponent");
  target->callback([&] {
    run = [&]() -> Output {
      const auto t = build_target_snake(int_list(ks_text), exponent_list(qs_text), exponent_arg(target_beta));
      const auto oracle = outer_profile(link_model_from_arcs(t.arcs));
      json result{{"expected", io::to_json(t.expected)}, {"oracle", io::to_json(oracle)},
                  {"agree", oracle == t.expected}};
      if (t.spec) {
        result["snake"] = io::to_json(SnakeInstance{*t.spec, {}});
      } else {
        result["snake"] = "bubble";
      }
      result["arcs"] = io::to_json(t.arcs);
      return {result, {}, io::profile_to_csv(oracle), {}};
    };
  });

  auto* equiv = outer->add_subcommand("equiv", "Same-homology certificate for two snakes");
  std::string equiv_a, equiv_b, map_file;
  equiv->add_option("first", equiv_a, "Snake JSON")->required();
  equiv->add_option("second", equiv_b, "Snake JSON")->required();
  equiv->add_option("--map", map_file, "Zone correspondence JSON");
  equiv->callback([&] {
    run = [&]() -> Output {
      const auto a = io::snake_from_json(inputs.read_json(equiv_a));
      const auto b = io::snake_from_json(inputs.read_json(equiv_b));
      std::optional<ZoneCorrespondence> map;
      if (!map_file.empty()) map = io::correspondence_from_json(inputs.read_json(map_file));
      const auto v = weak_equiv_same_homology(a, b, map);
      return {io::to_json(v), v.assumptions, {}, {}};
    };
  });

  // realize
  auto* realize = app.add_subcommand("realize", "Monomial arc families and their tangency matrices");
  realize->require_subcommand(1);
  bool numeric = false;
  realize->add_flag("--numeric", numeric, "Add numeric tangency estimates");
  std::string r_beta = "1", r_alpha = "2", r_alphas = "2,3", r_spec;
  int r_k = 2;
  auto* r_snake = realize->add_subcommand("snake", "Realize a snake JSON");
  r_snake->add_option("spec", r_spec, "Snake JSON")->required();
  auto* r_bubble = realize->add_subcommand("bubble", "Bubble snake");
  r_bubble->add_option("--beta", r_beta);
  r_bubble->add_option("--alpha", r_alpha);
  auto* r_nonsnake = realize->add_subcommand("nonsnake", "Non-snake bubble");
  r_nonsnake->add_option("--k", r_k);
  r_nonsnake->add_option("--beta", r_beta);
  r_nonsnake->add_option("--alphas", r_alphas, "alpha_1,...,alpha_k");
  auto* r_horn = realize->add_subcommand("horn", "Horn as a closed chain of two triangles");
  r_horn->add_option("--beta", r_beta);
  auto realize_run = [&](std::function<ArcFamily()> build) {
    run = [&, build]() -> Output {
      const auto f = build();
      auto result = io::to_json(f);
      if (numeric) {
        json est = json::array();
        for (const auto& a : f.arcs) {
          json row = json::array();
          for (const auto& b : f.arcs) {
            const double v = tord_numeric(a.arc, b.arc);
            row.push_back(std::isinf(v) ? json("inf") : json(v));
          }
          est.push_back(row);
        }
        result["numeric_estimates"] = est;
      }
      return {result, {}, io::matrix_to_csv(link_model_from_arcs(f)), {}};
    };
  };
  r_snake->callback([&] {
    realize_run([&] { return realize_snake_instance(io::snake_from_json(inputs.read_json(r_spec))); });
  });
  r_bubble->callback([&] { realize_run([&] { return realize_bubble_snake(exponent_arg(r_beta), exponent_arg(r_alpha)); }); });
  r_nonsnake->callback([&] {
    realize_run([&] { return realize_nonsnake_bubble(r_k, exponent_arg(r_beta), exponent_list(r_alphas)); });
  });
  r_horn->callback([&] { realize_run([&] { return realize_horn(exponent_arg(r_beta)); }); });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Quotient oracle for debugging");
  std::string oracle_file, oracle_b;
  std::vector<std::string> oracle_merges;
  int oracle_random = 0;
  auto* oracle_file_opt = oracle->add_option("complex", oracle_file, "Complex JSON");
  oracle->add_option("--b", oracle_b, "Resolution p/q or inf");
  oracle->add_option("--merge", oracle_merges, "Declared b-equivalent pair u,v");
  oracle->add_option("--random", oracle_random, "Compare with the inner formula on N random complexes")
      ->excludes(oracle_file_opt);
  oracle->callback([&] {
    run = [&]() -> Output {
      if (oracle_random > 0) {
        std::mt19937 rng(g.seed);
        int checked = 0, mismatches = 0;
        for (int i = 0; i < oracle_random; ++i) {
          const auto c = random_complex(rng);
          std::vector<Exponent> bs;
          for (const auto& e : c.edges()) bs.push_back(e.sigma);
          for (const auto& b : bs) {
            ++checked;
            if (mdh_inner(c, b, 1) != quotient_rank(quotient_from_complex(c), b).rank) ++mismatches;
          }
        }
        return {{{"complexes", oracle_random}, {"seed", g.seed}, {"checked", checked}, {"mismatches", mismatches}},
                {},
                "complexes,checked,mismatches\n" + std::to_string(oracle_random) + "," + std::to_string(checked) +
                    "," + std::to_string(mismatches) + "\n",
                {}};
      }
      if (oracle_file.empty() || oracle_b.empty()) throw InputError("give a complex and --b, or --random N");
      const auto c = io::complex_from_json(inputs.read_json(oracle_file));
      auto q = quotient_from_complex(c);
      for (const auto& pair : oracle_merges) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos) throw InputError("--merge expects u,v");
        const auto u = c.index_of(pair.substr(0, comma)), v = c.index_of(pair.substr(comma + 1));
        if (!u || !v) throw InputError("--merge names an unknown vertex: " + pair);
        q.merges.emplace_back(*u, *v);
      }
      const auto b = exponent_arg(oracle_b);
      const auto r = quotient_rank(q, b);
      json classes = json::object();
      for (std::size_t i = 0; i < r.classes.size(); ++i) classes[c.vertices()[i]] = c.vertices()[r.classes[i]];
      return {{{"b", io::to_json(b)}, {"rank", r.rank}, {"components", r.components}, {"classes", classes}},
              {},
              "b,rank,components\n" + b.to_string() + "," + std::to_string(r.rank) + "," +
                  std::to_string(r.components) + "\n",
              {}};
    };
  });

  // simplify
  auto* simp = app.add_subcommand("simplify", "Canonical complex");
  std::string simp_file;
  simp->add_option("complex", simp_file, "Complex JSON")->required();
  simp->callback([&] {
    run = [&]() -> Output {
      const auto s = simplify(io::complex_from_json(inputs.read_json(simp_file)));
      return {io::to_json(s), {}, {}, io::complex_to_dot(s)};
    };
  });

  // iso
  auto* iso = app.add_subcommand("iso", "Label-preserving isomorphism test");
  std::string iso_a, iso_b;
  iso->add_option("first", iso_a, "Complex JSON")->required();
  iso->add_option("second", iso_b, "Complex JSON")->required();
  iso->callback([&] {
    run = [&]() -> Output {
      const auto a = io::complex_from_json(inputs.read_json(iso_a));
      const auto b = io::complex_from_json(inputs.read_json(iso_b));
      const auto m = find_isomorphism(a, b, g.max_size);
      json result{{"isomorphic", m.has_value()}};
      if (m) result["map"] = *m;
      return {result, {}, std::string("isomorphic\n") + (m ? "true" : "false") + "\n", {}};
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "Convert a complex, profile or model to DOT/CSV");
  std::string exp_file;
  exp->add_option("file", exp_file, "JSON file")->required();
  exp->callback([&] {
    run = [&]() -> Output {
      auto j = inputs.read_json(exp_file);
      if (j.contains("result")) j = j.at("result");  // accept CLI reports
      if (j.contains("profile")) j = j.at("profile");
      if (j.contains("vertices")) {
        const auto c = io::complex_from_json(j);
        return {io::to_json(c), {}, {}, io::complex_to_dot(c)};
      }
      if (j.contains("intervals")) {
        const auto p = io::profile_from_json(j);
        return {io::to_json(p), {}, io::profile_to_csv(p), {}};
      }
      if (j.contains("matrix") && j.contains("arcs") && j.at("arcs").is_array() && !j.at("arcs").empty() &&
          j.at("arcs")[0].is_string()) {
        const auto m = io::model_from_json(j);
        return {io::to_json(m), m.assumptions, io::matrix_to_csv(m), {}};
      }
      throw InputError("cannot tell whether the file holds a complex, a profile or a model");
    };
  });

  // global flags may follow the subcommand
  std::function<void(CLI::App*)> pass_through = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      pass_through(sub);
    }
  };
  pass_through(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    std::string args;
    for (int i = 1; i < argc; ++i) {
      if (std::string(argv[i]) != "--timing") args += std::string(argv[i]) + '\0';
    }
    inputs.material = "args:" + args;
    auto out = run();
    if (g.format == "csv") {
      if (out.csv.empty()) throw InputError("CSV output is not available for this command");
      std::cout << out.csv;
    } else if (g.format == "dot") {
      if (out.dot.empty()) throw InputError("DOT output is not available for this command");
      std::cout << out.dot;
    } else {
      std::string command;
      for (auto* sub = app.get_subcommands().front(); sub; ) {
        command += (command.empty() ? "" : " ") + sub->get_name();
        const auto subs = sub->get_subcommands();
        sub = subs.empty() ? nullptr : subs.front();
      }
      json report{{"command", command},
                  {"input_digest", "sha256:" + sha256_hex(inputs.material)},
                  {"assumptions", out.assumptions},
                  {"result", out.result}};
      if (g.timing) {
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      std::cout << report.dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "mdh: " << error_kind(e) << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}
