#include "demkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "demkit/cache.hpp"
#include "demkit/theorems.hpp"

namespace demkit {

namespace {

// Malformed input: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input outside the mathematical hypotheses: exit code 3.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootSystemPtr parse_system(const std::string& name) {
  try {
    return RootSystem::parse(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Weight parse_weight(const RootSystem& rs, const std::string& text, const char* what) {
  Weight w;
  try {
    w = Weight::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
  if (w.rank() != static_cast<std::size_t>(rs.rank()))
    throw UsageError(std::string(what) + " '" + text + "' needs " + std::to_string(rs.rank()) + " coordinates for " +
                     rs.name());
  return w;
}

Weight parse_dominant(const RootSystem& rs, const std::string& text, const char* what) {
  Weight w = parse_weight(rs, text, what);
  if (!w.is_dominant())
    throw HypothesisError(std::string(what) + " " + w.to_string() + " is not dominant");
  return w;
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
  try {
    Weight w = Weight::parse(text);
    return std::vector<int>(w.begin(), w.end());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw UsageError("cannot open output file " + path);
  f << content;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string character_table(const GradedCharacter& x) {
  const auto terms = x.sorted_terms();
  std::size_t ww = 6, gw = 5;
  for (const auto& [k, m] : terms) {
    ww = std::max(ww, k.weight.to_string().size());
    gw = std::max(gw, std::to_string(k.grade).size());
  }
  std::ostringstream os;
  os << pad("weight", ww) << "  " << pad("grade", gw) << "  multiplicity\n";
  for (const auto& [k, m] : terms)
    os << pad(k.weight.to_string(), ww) << "  " << pad(std::to_string(k.grade), gw) << "  " << m.get_str() << '\n';
  return os.str();
}

std::string presentation_table(const RootSystem& rs, const std::vector<RelationDescriptor>& rel) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"alpha", "d", "pairing", "s", "m", "relations"});
  for (const auto& r : rel) {
    std::string alpha;
    for (std::size_t i = 0; i < r.root.size(); ++i)
      alpha += (i ? "," : "") + std::to_string(r.root[i]);
    std::string text = "(x-_a t^" + std::to_string(r.power_exponent) + ") w = 0";
    if (r.nilpotency)
      text += "; (x-_a t^" + std::to_string(r.nilpotency_exponent) + ")^" + std::to_string(r.nilpotency_power) +
              " w = 0";
    rows.push_back({alpha, std::to_string(r.d), std::to_string(r.pairing), std::to_string(r.s), std::to_string(r.m),
                    text});
  }
  std::vector<std::size_t> width(6, 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  os << rs.name() << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      os << pad(row[i], width[i]) << "  ";
    os << row.back() << '\n';
  }
  return os.str();
}

struct CharOptions {
  std::string system;
  int level = 1;
  std::string weight;
  std::string kind = "demazure";
  int node = 0;
  int max_grade = -1;
  bool graded = false;
  bool pretty = false;
  std::string out;
  bool no_cache = false;
  std::string cache_dir;
};

// Serves from the cache when possible and fills it otherwise.
template <class Compute>
GradedCharacter cached(const CharOptions& o, const CacheKey& key, Compute compute) {
  if (o.no_cache)
    return compute();
  Cache cache(resolve_cache_dir(o.cache_dir.empty() ? std::nullopt : std::optional<std::string>(o.cache_dir)));
  if (auto hit = cache.load(key))
    return *hit;
  GradedCharacter x = compute();
  try {
    cache.store(key, x);
  } catch (const std::exception&) {
    // an unwritable cache only costs recomputation
  }
  return x;
}

int run_char(const CharOptions& o, std::ostream& out, std::ostream& err) {
  const RootSystemPtr rs = parse_system(o.system);
  if (o.level < 0)
    throw UsageError("--level must be non-negative");

  GradedCharacter x;
  bool graded_output = o.graded;
  if (o.kind == "weyl") {
    if (o.weight.empty())
      throw UsageError("--weight is required");
    const Weight lambda = parse_dominant(*rs, o.weight, "weight");
    CacheKey key{rs->name(), CacheKind::weyl, 0, lambda};
    if (o.no_cache) {
      x = at_grade(weyl_character(rs, lambda), 0);
    } else {
      Cache cache(resolve_cache_dir(o.cache_dir.empty() ? std::nullopt : std::optional<std::string>(o.cache_dir)));
      if (auto hit = cache.load(key)) {
        x = *hit;
      } else {
        const Character c = weyl_character(rs, lambda);
        try {
          cache.store(key, c);
        } catch (const std::exception&) {
        }
        x = at_grade(c, 0);
      }
    }
  } else if (o.kind == "demazure" || o.kind == "kr") {
    Weight lambda;
    if (o.kind == "kr") {
      if (o.node < 1 || o.node > rs->rank())
        throw UsageError("--node must be between 1 and " + std::to_string(rs->rank()));
      lambda = (rs->d_simple(o.node) * o.level) * rs->fundamental_weight(o.node);
    } else {
      if (o.weight.empty())
        throw UsageError("--weight is required");
      lambda = parse_dominant(*rs, o.weight, "weight");
    }
    if (o.level == 0 && !lambda.is_zero())
      throw HypothesisError("at level 0 only the zero weight is admissible");
    CacheKey key{rs->name(), CacheKind::demazure, o.level, lambda};
    x = cached(o, key, [&] { return demazure_character(rs, o.level, lambda); });
  } else if (o.kind == "affine") {
    if (o.weight.empty())
      throw UsageError("--weight is required");
    if (o.max_grade < 0)
      throw UsageError("--max-grade is required for --kind affine");
    const Weight lambda = parse_dominant(*rs, o.weight, "weight");
    if (o.level < 1 || !rs->in_level_alcove(lambda, o.level))
      throw HypothesisError("level Lambda_0 + weight is not dominant");
    CacheKey key{rs->name(), CacheKind::affine_truncated, o.level, lambda, o.max_grade};
    x = cached(o, key, [&] { return affine_irreducible_character_truncated(rs, o.level, lambda, o.max_grade); });
    graded_output = true;
  } else {
    throw UsageError("unknown --kind '" + o.kind + "'");
  }

  std::ostringstream body;
  if (o.pretty) {
    body << character_table(graded_output ? x : at_grade(collapse(x), 0));
  } else if (graded_output) {
    write_character(body, x);
  } else {
    write_character(body, collapse(x));
  }
  std::ostringstream footer;
  footer << "dim " << x.dimension().get_str() << '\n';
  if (graded_output)
    footer << "graded " << format_graded_dimension(graded_dimension(x)) << '\n';

  if (o.pretty)
    body << footer.str();
  else
    err << footer.str();
  emit(body.str(), o.out, out);
  return exit_ok;
}

struct VerifyOptions {
  std::string system;
  int level = 1;
  std::vector<std::string> parts;
  std::vector<std::string> part_specs;
  std::string lambda;
  std::string mu;
  std::string mu1;
  std::string mu2;
  std::string s;
  int node = 0;
  int j = 0;
  int m = 1;
  int k = 1;
  int max_grade = 2;
  int n_max = 4;
  std::string out;
  bool no_timing = false;
};

Weight lambda_or_zero(const RootSystem& rs, const std::string& text) {
  return text.empty() ? rs.zero() : parse_weight(rs, text, "lambda");
}

Weight required_weight(const RootSystem& rs, const std::string& text, const char* what) {
  if (text.empty())
    throw UsageError(std::string("--") + what + " is required");
  return parse_weight(rs, text, what);
}

Certificate run_verification(const std::string& which, const VerifyOptions& o) {
  const RootSystemPtr rs = parse_system(o.system);
  if (which == "demprop") {
    std::vector<Weight> parts;
    for (const auto& p : o.parts)
      parts.push_back(parse_weight(*rs, p, "part"));
    return verify_demprop(rs, o.level, parts, lambda_or_zero(*rs, o.lambda));
  }
  if (which == "mapsdem") {
    std::vector<MapsdemPart> parts;
    for (const auto& spec : o.part_specs) {
      const auto colon = spec.find(':');
      if (colon == std::string::npos)
        throw UsageError("--part expects LEVEL:WEIGHT, got '" + spec + "'");
      const auto lv = parse_ints(spec.substr(0, colon), "part level");
      if (lv.size() != 1)
        throw UsageError("--part expects LEVEL:WEIGHT, got '" + spec + "'");
      parts.push_back({lv[0], parse_weight(*rs, spec.substr(colon + 1), "part")});
    }
    return verify_mapsdem(rs, o.level, parts, lambda_or_zero(*rs, o.lambda));
  }
  if (which == "krdecom") {
    std::vector<int> s = o.s.empty() ? std::vector<int>(rs->rank(), 0) : parse_ints(o.s, "s");
    return verify_krdecom(rs, o.level, s, lambda_or_zero(*rs, o.lambda));
  }
  if (which == "ev0")
    return verify_ev0(rs, o.level, lambda_or_zero(*rs, o.lambda));
  if (which == "twofold")
    return verify_2fold(rs, o.node, o.level, lambda_or_zero(*rs, o.lambda), required_weight(*rs, o.mu1, "mu1"),
                        required_weight(*rs, o.mu2, "mu2"));
  if (which == "twofold-corollary")
    return verify_2fold_corollary(rs, o.node, o.level, o.j, o.m, required_weight(*rs, o.mu1, "mu1"),
                                  required_weight(*rs, o.mu2, "mu2"));
  if (which == "genschurpos")
    return verify_genschurpos(rs, o.node, o.k, o.level, o.m, lambda_or_zero(*rs, o.lambda),
                              required_weight(*rs, o.mu, "mu"));
  if (which == "stabilization")
    return verify_stabilization(rs, o.level, lambda_or_zero(*rs, o.lambda), o.max_grade, o.n_max);
  if (which == "minuscule")
    return verify_minuscule(rs);
  throw UsageError("unknown verification '" + which + "'");
}

struct ScanOptions {
  std::string system;
  int height_bound = 0;
  unsigned jobs = 0;
  std::string out_dir;
  bool no_timing = false;
};

int run_scan(const ScanOptions& o, std::ostream& out) {
  const RootSystemPtr rs = parse_system(o.system);
  if (o.height_bound < 0)
    throw UsageError("--height-bound must be non-negative");
  const ScanResult r = schur_scan(rs, o.height_bound, o.jobs);
  const std::string summary = r.summary.to_json().dump() + "\n";
  if (o.out_dir.empty()) {
    for (const auto& c : r.certificates)
      out << c.to_json(!o.no_timing).dump() << '\n';
    out << summary;
  } else {
    std::filesystem::create_directories(o.out_dir);
    std::ostringstream lines;
    for (const auto& c : r.certificates)
      lines << c.to_json(!o.no_timing).dump() << '\n';
    emit(lines.str(), (std::filesystem::path(o.out_dir) / "certificates.jsonl").string(), out);
    emit(summary, (std::filesystem::path(o.out_dir) / "summary.json").string(), out);
    out << summary;
  }
  return r.summary.refuted == 0 ? exit_ok : exit_refuted;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded characters of Demazure modules and verification certificates", "demkit"};
  app.require_subcommand(1);

  CharOptions co;
  auto* ch = app.add_subcommand("char", "Compute a character");
  ch->add_option("--system", co.system, "Cartan type, e.g. A2")->required();
  ch->add_option("--level", co.level, "Level");
  ch->add_option("--weight", co.weight, "Comma-separated fundamental-weight coordinates");
  ch->add_option("--kind", co.kind, "demazure | weyl | kr | affine")
      ->check(CLI::IsMember({"demazure", "weyl", "kr", "affine"}));
  ch->add_option("--node", co.node, "Node for --kind kr");
  ch->add_option("--max-grade", co.max_grade, "Truncation depth for --kind affine");
  ch->add_flag("--graded", co.graded, "Keep the grading");
  ch->add_flag("--pretty", co.pretty, "Human-readable table");
  ch->add_option("--out", co.out, "Write the character to FILE");
  ch->add_flag("--no-cache", co.no_cache, "Bypass the result cache");
  ch->add_option("--cache-dir", co.cache_dir, "Cache directory");

  CharOptions po;
  auto* pres = app.add_subcommand("presentation", "Defining relations of D(level, weight)");
  pres->add_option("--system", po.system)->required();
  pres->add_option("--level", po.level)->required();
  pres->add_option("--weight", po.weight)->required();
  pres->add_flag("--pretty", po.pretty);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a verification and print its certificate");
  verify->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--system", vo.system)->required();
    sub->add_option("--out", vo.out, "Write the certificate to FILE");
    sub->add_flag("--no-timing", vo.no_timing, "Omit the elapsed field");
  };
  auto* v_demprop = verify->add_subcommand("demprop");
  add_common(v_demprop);
  v_demprop->add_option("--level", vo.level)->required();
  v_demprop->add_option("--parts", vo.parts, "Elements of Gamma (repeatable)");
  v_demprop->add_option("--lambda", vo.lambda);
  auto* v_mapsdem = verify->add_subcommand("mapsdem");
  add_common(v_mapsdem);
  v_mapsdem->add_option("--level", vo.level)->required();
  v_mapsdem->add_option("--part", vo.part_specs, "LEVEL:WEIGHT (repeatable)");
  v_mapsdem->add_option("--lambda", vo.lambda);
  auto* v_kr = verify->add_subcommand("krdecom");
  add_common(v_kr);
  v_kr->add_option("--level", vo.level)->required();
  v_kr->add_option("--s", vo.s, "Comma-separated multiplicities s_i");
  v_kr->add_option("--lambda", vo.lambda);
  auto* v_ev0 = verify->add_subcommand("ev0");
  add_common(v_ev0);
  v_ev0->add_option("--level", vo.level)->required();
  v_ev0->add_option("--lambda", vo.lambda);
  auto* v_two = verify->add_subcommand("twofold");
  add_common(v_two);
  v_two->add_option("--node", vo.node)->required();
  v_two->add_option("--level", vo.level)->required();
  v_two->add_option("--lambda", vo.lambda);
  v_two->add_option("--mu1", vo.mu1)->required();
  v_two->add_option("--mu2", vo.mu2)->required();
  auto* v_twoc = verify->add_subcommand("twofold-corollary");
  add_common(v_twoc);
  v_twoc->add_option("--node", vo.node)->required();
  v_twoc->add_option("--level", vo.level)->required();
  v_twoc->add_option("--j", vo.j)->required();
  v_twoc->add_option("--m", vo.m)->required();
  v_twoc->add_option("--mu1", vo.mu1)->required();
  v_twoc->add_option("--mu2", vo.mu2)->required();
  auto* v_gen = verify->add_subcommand("genschurpos");
  add_common(v_gen);
  v_gen->add_option("--node", vo.node)->required();
  v_gen->add_option("--k", vo.k)->required();
  v_gen->add_option("--level", vo.level)->required();
  v_gen->add_option("--m", vo.m)->required();
  v_gen->add_option("--lambda", vo.lambda);
  v_gen->add_option("--mu", vo.mu)->required();
  auto* v_stab = verify->add_subcommand("stabilization");
  add_common(v_stab);
  v_stab->add_option("--level", vo.level)->required();
  v_stab->add_option("--lambda", vo.lambda);
  v_stab->add_option("--max-grade", vo.max_grade)->required();
  v_stab->add_option("--n-max", vo.n_max)->required();
  auto* v_min = verify->add_subcommand("minuscule");
  add_common(v_min);

  ScanOptions so;
  auto* scan = app.add_subcommand("scan", "Exhaustive Schur positivity scan");
  scan->add_option("--system", so.system)->required();
  scan->add_option("--height-bound", so.height_bound)->required();
  scan->add_option("--jobs", so.jobs, "Worker threads (0 = all cores)");
  scan->add_option("--out", so.out_dir, "Write certificates.jsonl and summary.json to DIR");
  scan->add_flag("--no-timing", so.no_timing, "Omit the elapsed fields");

  std::string cache_dir;
  auto* cache = app.add_subcommand("cache", "Manage the result cache");
  cache->require_subcommand(1);
  cache->add_option("--cache-dir", cache_dir, "Cache directory");
  cache->fallthrough();
  auto* c_path = cache->add_subcommand("path");
  auto* c_clear = cache->add_subcommand("clear");
  auto* c_stats = cache->add_subcommand("stats");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (ch->parsed())
      return run_char(co, out, err);
    if (pres->parsed()) {
      const RootSystemPtr rs = parse_system(po.system);
      if (po.level < 1)
        throw HypothesisError("presentation needs level >= 1");
      const Weight lambda = parse_dominant(*rs, po.weight, "weight");
      const auto rel = presentation(*rs, po.level, lambda);
      if (po.pretty)
        out << presentation_table(*rs, rel);
      else
        out << presentation_json(*rs, po.level, lambda, rel).dump(2) << '\n';
      return exit_ok;
    }
    if (verify->parsed()) {
      for (CLI::App* sub : verify->get_subcommands()) {
        const Certificate c = run_verification(sub->get_name(), vo);
        emit(c.to_json(!vo.no_timing).dump(2) + "\n", vo.out, out);
        return exit_code(c.verdict);
      }
    }
    if (scan->parsed())
      return run_scan(so, out);
    if (cache->parsed()) {
      Cache store(resolve_cache_dir(cache_dir.empty() ? std::nullopt : std::optional<std::string>(cache_dir)));
      if (c_path->parsed()) {
        out << store.root().string() << '\n';
      } else if (c_clear->parsed()) {
        store.clear();
        out << Json::object({{"entries", store.entries()}}).dump() << '\n';
      } else if (c_stats->parsed()) {
        out << Json::object({{"entries", store.entries()}}).dump() << '\n';
      }
      return exit_ok;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return exit_hypothesis;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

} // namespace demkit
