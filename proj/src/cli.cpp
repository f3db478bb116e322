// Copyright 2026 The Hornkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hornkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hornkit/horn.hpp"
#include "hornkit/serialize.hpp"
#include "hornkit/tangent.hpp"
#include "hornkit/witness.hpp"

namespace hornkit {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string join(const std::vector<std::string>& args, char sep) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += sep;
    out += args[i];
  }
  return out;
}

Json config_json(const RunConfig& config) {
  return Json{{"prime", config.prime}, {"seed", config.seed}, {"trials", config.trials}};
}

std::string inequality_text(const HornInequality& ineq) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ineq.indices.size(); ++i) {
    for (std::size_t k = 0; k < ineq.indices[i].size(); ++k) {
      out << (i + k == 0 ? "" : " + ") << "l" << i + 1 << "_" << ineq.indices[i][k];
    }
  }
  if (ineq.indices.empty() || ineq.indices.front().empty()) out << "0";
  out << " >= " << ineq.rhs << "  [d=" << ineq.d << "; mus";
  for (const auto& mu : ineq.mus) out << " " << mu.to_string();
  out << "]";
  return out.str();
}

struct Options {
  RunConfig config;
  std::string method = "horn";
  std::string format = "json";
  std::size_t limit = 0;
  std::string shape;
  std::vector<std::string> classes;
  std::vector<int> rns;
  std::vector<std::string> diagram_args;
};

int cmd_check(const Options& o, std::ostream& out) {
  const std::vector<Partition> lambdas = parse_classes(o.classes);
  const int r = lambdas.front().rows();
  const int n = lambdas.front().ambient();
  const RunConfig& c = o.config;

  Json verdicts = Json::object();
  std::vector<std::pair<std::string, bool>> answers;
  std::optional<Violation> violated;
  std::map<Partition, std::uint64_t> expansion;
  const bool all = o.method == "all";
  if (all || o.method == "horn") {
    Verdict v = horn_verdict(lambdas, r, n);
    violated = v.violated;
    verdicts["horn"] = v;
    answers.emplace_back("horn", v.nonzero);
  }
  if (all || o.method == "lr") {
    expansion = lr_expand(lambdas, r, n);
    Json terms = Json::object();
    for (const auto& [p, coeff] : expansion) terms[p.to_string()] = coeff;
    verdicts["lr"] = Json{{"nonzero", !expansion.empty()},
                          {"method", method_name(Method::kLrOracle)},
                          {"expansion", terms}};
    answers.emplace_back("lr", !expansion.empty());
  }
  if (all || o.method == "numeric") {
    Verdict v = numeric_verdict(lambdas, r, n, c.seed, c.trials);
    verdicts["numeric"] = v;
    answers.emplace_back("numeric", v.nonzero);
  }
  const bool nonzero = answers.front().second;
  const bool agree = std::all_of(answers.begin(), answers.end(),
                                 [&](const auto& a) { return a.second == nonzero; });

  switch (c.format) {
    case OutputFormat::kJson: {
      Json j{{"command", "check"},   {"config", config_json(c)}, {"lambdas", lambdas},
             {"r", r},               {"n", n},                   {"nonzero", nonzero},
             {"agree", agree},       {"verdicts", verdicts}};
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::kText: {
      for (const auto& [name, value] : answers) {
        out << name << ": " << (value ? "nonzero" : "zero") << "\n";
      }
      if (violated) {
        out << "violated: " << inequality_text(violated->inequality) << " (slack " << violated->slack
            << ")\n";
      }
      if (!agree) out << "methods disagree\n";
      break;
    }
    case OutputFormat::kDiagram: {
      if (lambdas.size() == 2) {
        out << render_grassmann_pair(lambdas[0], lambdas[1]);
      } else {
        for (const auto& lambda : lambdas) out << lambda.to_string() << "\n" << render_pattern(hat_X(lambda));
      }
      out << (nonzero ? "nonzero" : "zero") << "\n";
      break;
    }
  }
  if (!agree) return exit_code::kWitnessFailed;
  return nonzero ? exit_code::kOk : exit_code::kZero;
}

int cmd_inequalities(const Options& o, std::ostream& out) {
  const int r = o.rns[0], n = o.rns[1], s = o.rns[2];
  const RunConfig& c = o.config;
  if (c.format == OutputFormat::kJson) {
    const std::vector<HornInequality> list = enumerate_horn(r, n, s, o.limit);
    Json j{{"command", "inequalities"}, {"r", r},         {"n", n},
           {"s", s},                    {"limit", o.limit}, {"count", list.size()},
           {"inequalities", list}};
    out << j.dump(2) << "\n";
  } else {
    std::size_t count = 0;
    for_each_horn_inequality(r, n, s, default_memo(), [&](const HornInequality& ineq) {
      out << inequality_text(ineq) << "\n";
      return o.limit == 0 || ++count < o.limit;
    });
  }
  return exit_code::kOk;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<Partition> lambdas = parse_classes(o.classes);
  const int r = lambdas.front().rows();
  const int n = lambdas.front().ambient();
  const RunConfig& c = o.config;
  WitnessTrace trace;
  try {
    trace = find_witness(lambdas, r, n, c.seed);
  } catch (const WitnessError& e) {
    err << "error: " << witness_error_name(e.kind()) << ": " << e.what() << "\n";
    if (c.format == OutputFormat::kJson) {
      Json j{{"command", "witness"}, {"config", config_json(c)}, {"lambdas", lambdas},
             {"error", witness_error_name(e.kind())}};
      out << j.dump(2) << "\n";
    }
    return e.kind() == WitnessError::Kind::kNotVanishing ? exit_code::kWitnessFailed
                                                         : exit_code::kGenericityExhausted;
  }
  const bool verified = verify_witness(trace, lambdas);
  switch (c.format) {
    case OutputFormat::kJson: {
      Json j{{"command", "witness"}, {"config", config_json(c)}, {"trace", trace},
             {"verified", verified}};
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::kText: {
      for (std::size_t l = 0; l < trace.levels.size(); ++l) {
        const WitnessLevel& level = trace.levels[l];
        out << "level " << l + 1 << " Gr(" << level.rows << "," << level.rows + level.cap << ") rank "
            << level.rank << " nullity " << level.nullity;
        if (level.terminal) {
          out << " terminal";
        } else {
          out << " kernel";
          for (const auto& rho : level.kernel_positions) out << " " << rho.to_string();
        }
        out << "\n";
      }
      out << "certificates:";
      for (const auto& chi : trace.certificates) out << " " << chi.to_string();
      out << "\nviolated: " << inequality_text(trace.final) << " (slack " << trace.slack << ")\n";
      out << "verified: " << (verified ? "yes" : "no") << "\n";
      break;
    }
    case OutputFormat::kDiagram:
      out << render_witness(trace);
      break;
  }
  return verified ? exit_code::kOk : exit_code::kWitnessFailed;
}

std::vector<int> parse_shape(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string piece = trim(std::string_view(text).substr(pos, comma - pos));
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("--shape wants d,r,n", pos);
    }
    out.push_back(std::stoi(piece));
    pos = comma + 1;
  }
  if (out.size() != 3) throw ParseError("--shape wants d,r,n", 0);
  return out;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  const std::string joined = join(o.diagram_args, ';');
  std::string picture;
  Json info{{"command", "diagram"}, {"input", joined}};
  if (joined.find('/') != std::string::npos) {
    const std::vector<Partition> lambdas = parse_classes(o.diagram_args);
    if (lambdas.size() == 2) {
      picture = render_grassmann_pair(lambdas[0], lambdas[1]);
    } else {
      for (const auto& lambda : lambdas) picture += render_pattern(hat_X(lambda));
    }
    std::vector<long> dims;
    for (const auto& lambda : lambdas) dims.push_back(lambda.weight());
    info["lambdas"] = lambdas;
    info["dims"] = dims;
  } else {
    std::vector<StepString> words;
    std::size_t offset = 0;
    for (const auto& arg : o.diagram_args) {
      std::size_t pos = 0;
      while (pos <= arg.size()) {
        const std::size_t semi = std::min(arg.find(';', pos), arg.size());
        const std::string piece = trim(std::string_view(arg).substr(pos, semi - pos));
        if (!piece.empty()) {
          try {
            words.push_back(StepString::parse(piece, o.shape.empty() ? 0 : 2));
          } catch (const ParseError& e) {
            throw ParseError(e.what(), offset + pos + e.position());
          }
        }
        pos = semi + 1;
      }
      offset += arg.size() + 1;
    }
    if (words.empty()) throw ParseError("nothing to draw", 0);
    std::vector<long> dims;
    if (o.shape.empty()) {
      for (const auto& w : words) {
        if (w.steps() != 1) throw ParseError("012-strings need --shape d,r,n", 0);
        const Partition lambda = string_to_partition(w);
        picture += render_pattern(hat_X(lambda));
        dims.push_back(lambda.weight());
      }
    } else {
      const std::vector<int> shape = parse_shape(o.shape);
      const int d = shape[0], r = shape[1], n = shape[2];
      if (words.size() == 2) {
        picture = render_lifted_pair(words[0], words[1], d, r, n);
        for (const auto& w : words) dims.push_back(cell_dimension(w));
      } else {
        for (const auto& w : words) {
          const TwoStepModel y = hat_Y(w, d, r, n);
          const TwoStepBlocks b = blocks_of(y);
          picture += render_two_step(y);
          picture += "\nsigma(01):\n" + render_pattern(b.quotient);
          picture += "sigma(02):\n" + render_pattern(b.top);
          picture += "sigma(12):\n" + render_pattern(b.fiber);
          dims.push_back(y.pattern.dim());
        }
      }
      info["shape"] = shape;
    }
    info["strings"] = words;
    info["dims"] = dims;
  }
  if (o.config.format == OutputFormat::kJson) {
    info["diagram"] = picture;
    out << info.dump(2) << "\n";
  } else {
    out << picture;
  }
  return exit_code::kOk;
}

}  // namespace

std::vector<Partition> parse_classes(const std::vector<std::string>& args) {
  const std::string joined = join(args, ';');
  std::vector<Partition> out;
  std::size_t pos = 0;
  while (pos <= joined.size()) {
    const std::size_t semi = std::min(joined.find(';', pos), joined.size());
    const std::string_view raw = std::string_view(joined).substr(pos, semi - pos);
    const std::string piece = trim(raw);
    if (!piece.empty()) {
      const std::size_t lead = raw.find_first_not_of(" \t\r\n");
      try {
        out.push_back(Partition::parse(piece));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), pos + lead + e.position());
      }
      if (out.back().rows() != out.front().rows() || out.back().cap() != out.front().cap()) {
        throw ParseError("all classes must share one rectangle", pos + lead);
      }
    }
    pos = semi + 1;
  }
  if (out.empty()) throw ParseError("no classes given", 0);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("HORNKIT_SEED")) {
    try {
      o.config.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: HORNKIT_SEED is not an unsigned integer\n";
      return exit_code::kUsage;
    }
  }

  CLI::App app{"Horn inequalities and Schubert intersection checks", "hornkit"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--prime", o.config.prime, "Prime for the finite field")->capture_default_str();
  app.add_option("--seed", o.config.seed, "Random seed (default $HORNKIT_SEED or 0)");
  app.add_option("--trials", o.config.trials, "Trials for the numeric verdict")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "diagram"}));

  CLI::App* check = app.add_subcommand("check", "Decide whether a product of classes is nonzero");
  check->add_option("classes", o.classes, "Partitions like \"0,1,3,3/4x5 ; 3,3,3,5/4x5\"")->required();
  check->add_option("--method", o.method, "Verdict method")
      ->check(CLI::IsMember({"horn", "lr", "numeric", "all"}));

  CLI::App* ineqs = app.add_subcommand("inequalities", "List Horn inequalities for r n s");
  ineqs->add_option("rns", o.rns, "r n s")->required()->expected(3);
  ineqs->add_option("--limit", o.limit, "Stop after this many (0 = all)");

  CLI::App* witness = app.add_subcommand("witness", "Certify a vanishing product");
  witness->add_option("classes", o.classes, "Partitions")->required();

  CLI::App* diagram = app.add_subcommand("diagram", "Draw coordinate tangent patterns");
  diagram->add_option("input", o.diagram_args, "Partitions or digit strings")->required();
  diagram->add_option("--shape", o.shape, "d,r,n for 012-strings");

  // Global options are accepted after the subcommand too.
  for (CLI::App* sub : {check, ineqs, witness, diagram}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }

  o.config.format = o.format == "text"      ? OutputFormat::kText
                    : o.format == "diagram" ? OutputFormat::kDiagram
                                            : OutputFormat::kJson;
  if (o.config.prime <= (1u << 20) || !is_prime(o.config.prime)) {
    err << "error: --prime must be a prime above 2^20\n";
    return exit_code::kUsage;
  }

  try {
    PrimeScope scope(o.config.prime);
    if (check->parsed()) return cmd_check(o, out);
    if (ineqs->parsed()) {
      if (!(0 < o.rns[0] && o.rns[0] < o.rns[1]) || o.rns[2] < 1) {
        err << "error: inequalities needs 0 < r < n and s >= 1\n";
        return exit_code::kUsage;
      }
      return cmd_inequalities(o, out);
    }
    if (witness->parsed()) return cmd_witness(o, out, err);
    return cmd_diagram(o, out);
  } catch (const ParseError& e) {
    err << "error: parse error at column " << e.position() + 1 << ": " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }
}

}  // namespace hornkit
