#include "cli.hpp"

#include "weilzeta/errors.hpp"
#include "weilzeta/parallel.hpp"
#include "weilzeta/primesets.hpp"
#include "weilzeta/quadform.hpp"
#include "weilzeta/verify.hpp"
#include "weilzeta/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace weilzeta::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("WEILZETA_LOG");
  if (!env) return LogLevel::quiet;
  std::string v(env);
  if (v == "debug") return LogLevel::debug;
  if (v == "info") return LogLevel::info;
  return LogLevel::quiet;
}

std::vector<u64> parse_u64_list(const std::string& text, const std::string& what) {
  std::vector<u64> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParameterError("malformed " + what + ": '" + text + "'");
    try {
      out.push_back(std::stoull(item));
    } catch (const std::out_of_range&) {
      throw RangeError(what + " value '" + item + "' exceeds 64 bits");
    }
  }
  return out;
}

std::string csv_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? ";" : "") + csv_text(v[i]);
    return joined;
  }
  return v.dump();
}

std::string csv_cell(const Json& v) {
  const auto s = csv_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

// One output line per result row; params are echoed on every line.
class Emitter {
public:
  Emitter(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

  void emit(const std::string& command, const Json& params, const std::vector<Json>& rows,
            double wall_ms) {
    if (csv_ && !rows.empty()) {
      out_ << "command";
      for (const auto& [k, v] : params.items()) out_ << ',' << k;
      for (const auto& [k, v] : rows.front().items()) out_ << ',' << k;
      out_ << ",wall_ms\n";
    }
    for (const auto& row : rows) {
      if (csv_) {
        out_ << command;
        for (const auto& [k, v] : params.items()) out_ << ',' << csv_cell(v);
        for (const auto& [k, v] : row.items()) out_ << ',' << csv_cell(v);
        out_ << ',' << csv_cell(Json(wall_ms)) << '\n';
      } else {
        Json line;
        line["command"] = command;
        line["params"] = params;
        line["result"] = row;
        line["wall_ms"] = wall_ms;
        out_ << line.dump() << '\n';
      }
    }
    out_.flush();
  }

private:
  std::ostream& out_;
  bool csv_;
};

Json series_rows_json(const Checkpoint& cp) {
  Json row;
  row["N"] = cp.N;
  row["value"] = static_cast<double>(cp.value);
  row["terms"] = cp.terms;
  if (cp.tail_bound) row["tail_bound"] = static_cast<double>(*cp.tail_bound);
  return row;
}

std::vector<Json> series_rows(const PartialSumSeries& series) {
  std::vector<Json> rows;
  for (const auto& cp : series.checkpoints) rows.push_back(series_rows_json(cp));
  return rows;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["claim_id"] = r.claim_id;
  j["range"] = {{"lo", r.range_lo}, {"hi", r.range_hi}};
  j["checked_count"] = r.checked_count;
  j["scanned_count"] = r.scanned_count;
  Json ces = Json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back({{"input", c.input}, {"expected", c.expected}, {"found", c.found}});
  j["counterexamples"] = ces;
  Json info = Json::object();
  for (const auto& [k, v] : r.info) info[k] = v;
  j["info"] = info;
  j["passed"] = r.passed;
  return j;
}

Json form_json(const BinaryQuadraticForm& f) { return f.to_string(); }

} // namespace

PrimeSet parse_prime_set(const std::string& text) {
  if (auto named = parse_standard_set(text)) return standard_set(*named);
  if (text == "all") return PrimeSet::all_primes();
  if (text == "none") return PrimeSet::empty();
  if (text.rfind("mod:", 0) != 0) throw ParameterError("unknown prime set '" + text + "'");
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(4));
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (text.back() == ':') parts.emplace_back();
  if (parts.size() < 2) throw ParameterError("prime set must be mod:d:r1,r2, got '" + text + "'");
  const auto modulus = parse_u64_list(parts[0], "modulus");
  if (modulus.size() != 1) throw ParameterError("prime set needs one modulus: '" + text + "'");
  std::vector<u64> include, exclude;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    if (parts[i].rfind("inc=", 0) == 0) {
      include = parse_u64_list(parts[i].substr(4), "include list");
    } else if (parts[i].rfind("exc=", 0) == 0) {
      exclude = parse_u64_list(parts[i].substr(4), "exclude list");
    } else {
      throw ParameterError("unknown prime set modifier '" + parts[i] + "'");
    }
  }
  return PrimeSet(modulus[0], parse_u64_list(parts[1], "residue list"), include, exclude);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic of S-parts, binary quadratic forms, form prime sets and Weil zeta partial sums",
               "weilzeta"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string checkpoints_text;
  unsigned threads = 1;
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--checkpoints", checkpoints_text, "Comma-separated checkpoint list for series");
  app.add_option("--threads", threads, "Worker threads (0 = hardware)");
  app.add_option("--out", out_path, "Write data to FILE instead of stdout");

  // per-subcommand state
  u64 n = 0, limit = 0;
  i64 disc = 0;
  double s = 0, eps = 0;
  unsigned jmax = 0;
  std::string set_text, form_text, form2_text, claim;

  std::function<void(Emitter&)> action;
  const LogLevel level = log_level();

  auto timed = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto value = fn();
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    return std::pair{std::move(value), ms.count()};
  };
  auto series_options = [&] {
    SeriesOptions opts;
    opts.checkpoints = parse_u64_list(checkpoints_text, "checkpoint list");
    opts.threads = threads;
    return opts;
  };

  auto* spart = app.add_subcommand("spart", "n_S, the S-part of n");
  spart->add_option("n", n)->required();
  spart->add_option("--set", set_text)->required();
  spart->callback([&] {
    action = [&](Emitter& e) {
      const auto S = parse_prime_set(set_text);
      auto [v, ms] = timed([&] { return s_part(n, S); });
      e.emit("spart", {{"n", n}, {"set", set_text}}, {Json{{"s_part", v}}}, ms);
    };
  });

  auto* repr = app.add_subcommand("repr", "coprime representation of n by a form");
  repr->add_option("--form", form_text)->required();
  repr->add_option("n", n)->required();
  repr->callback([&] {
    action = [&](Emitter& e) {
      const auto f = parse_form(form_text);
      auto [rep, ms] = timed([&] { return represents_coprime(f, n); });
      Json row;
      row["representable"] = rep.has_value();
      row["x"] = rep ? Json(rep->x) : Json(nullptr);
      row["y"] = rep ? Json(rep->y) : Json(nullptr);
      e.emit("repr", {{"form", form_text}, {"n", n}}, {row}, ms);
    };
  });

  auto* reduce_cmd = app.add_subcommand("reduce", "reduced form and witness matrix");
  reduce_cmd->add_option("--form", form_text)->required();
  reduce_cmd->callback([&] {
    action = [&](Emitter& e) {
      const auto f = parse_form(form_text);
      auto [red, ms] = timed([&] { return reduce_with_witness(f); });
      const auto& w = red.witness;
      e.emit("reduce", {{"form", form_text}},
             {Json{{"reduced", form_json(red.form)}, {"witness", Json::array({w.p, w.q, w.r, w.s})}}}, ms);
    };
  });

  auto* equiv = app.add_subcommand("equiv", "proper equivalence of two forms");
  equiv->add_option("--form1", form_text)->required();
  equiv->add_option("--form2", form2_text)->required();
  equiv->callback([&] {
    action = [&](Emitter& e) {
      const auto f = parse_form(form_text), g = parse_form(form2_text);
      auto [eq, ms] = timed([&] { return properly_equivalent(f, g); });
      e.emit("equiv", {{"form1", form_text}, {"form2", form2_text}}, {Json{{"equivalent", eq}}}, ms);
    };
  });

  auto* genus = app.add_subcommand("genus", "genus signature and the classes in the genus");
  genus->add_option("--form", form_text)->required();
  genus->callback([&] {
    action = [&](Emitter& e) {
      const auto f = parse_form(form_text);
      auto [res, ms] = timed([&] { return std::pair{genus_signature(f), genus_classes(f)}; });
      Json classes = Json::array();
      for (const auto& g : res.second) classes.push_back(form_json(g));
      e.emit("genus", {{"form", form_text}},
             {Json{{"discriminant", res.first.discriminant}, {"residues", res.first.residues},
                   {"classes", classes}}},
             ms);
    };
  });

  auto* classes = app.add_subcommand("classes", "primitive reduced forms of a discriminant");
  classes->add_option("--disc", disc)->required()->allow_extra_args(false);
  classes->callback([&] {
    action = [&](Emitter& e) {
      auto [forms, ms] = timed([&] { return reduced_forms_of_discriminant(disc); });
      std::vector<Json> rows;
      for (const auto& g : forms) rows.push_back(Json{{"form", form_json(g)}});
      if (rows.empty()) rows.push_back(Json{{"form", nullptr}});
      e.emit("classes", {{"disc", disc}}, rows, ms);
    };
  });

  auto* pf = app.add_subcommand("pf", "primes p <= N with p - 1 in the genus of the form");
  pf->add_option("--form", form_text)->required();
  pf->add_option("--limit", limit)->required();
  pf->callback([&] {
    action = [&](Emitter& e) {
      const auto f = parse_form(form_text);
      auto [set, ms] = timed([&] { return enumerate_Pf(f, limit, threads); });
      std::vector<Json> rows;
      for (u64 p : set.primes) rows.push_back(Json{{"p", p}});
      e.emit("pf", {{"form", form_text}, {"limit", limit}}, rows, ms);
    };
  });

  auto* pif = app.add_subcommand("pif", "pi(N; f)");
  pif->add_option("--form", form_text)->required();
  pif->add_option("--limit", limit)->required();
  pif->callback([&] {
    action = [&](Emitter& e) {
      const auto f = parse_form(form_text);
      auto [count, ms] = timed([&] { return pi_f(limit, f, threads); });
      e.emit("pif", {{"form", form_text}, {"limit", limit}}, {Json{{"count", count}}}, ms);
    };
  });

  auto* zlog = app.add_subcommand("zeta-log", "truncated ln zeta^W_{H_S}(s)");
  zlog->add_option("--set", set_text)->required();
  zlog->add_option("--s", s)->required();
  zlog->add_option("--limit", limit)->required();
  auto* jmax_opt = zlog->add_option("--jmax", jmax);
  zlog->callback([&] {
    action = [&](Emitter& e) {
      const auto S = parse_prime_set(set_text);
      std::optional<unsigned> j;
      if (jmax_opt->count()) j = jmax;
      auto [series, ms] = timed([&] { return weil_log_partial(S, s, limit, j, series_options()); });
      Json params{{"set", set_text}, {"s", s}, {"limit", limit}};
      params["jmax"] = j ? Json(*j) : Json("auto");
      e.emit("zeta-log", params, series_rows(series), ms);
    };
  });

  auto* minorant = app.add_subcommand("minorant", "sum (p-1)_S p^{eps-2}");
  minorant->add_option("--set", set_text)->required();
  minorant->add_option("--eps", eps)->required();
  minorant->add_option("--limit", limit)->required();
  minorant->callback([&] {
    action = [&](Emitter& e) {
      const auto S = parse_prime_set(set_text);
      auto [series, ms] = timed([&] { return minorant_partial(S, eps, limit, series_options()); });
      e.emit("minorant", {{"set", set_text}, {"eps", eps}, {"limit", limit}}, series_rows(series), ms);
    };
  });

  auto* pfsum = app.add_subcommand("pfsum", "sum over P_f of p^{eps-1}");
  pfsum->add_option("--form", form_text)->required();
  pfsum->add_option("--eps", eps)->required();
  pfsum->add_option("--limit", limit)->required();
  pfsum->callback([&] {
    action = [&](Emitter& e) {
      const auto f = parse_form(form_text);
      auto [series, ms] = timed([&] { return pf_sum_partial(f, eps, limit, series_options()); });
      e.emit("pfsum", {{"form", form_text}, {"eps", eps}, {"limit", limit}}, series_rows(series), ms);
    };
  });

  auto* zs = app.add_subcommand("zeta-s", "prod over p in S of (1 - p^{1-s})^{-1}");
  zs->add_option("--set", set_text)->required();
  zs->add_option("--s", s)->required();
  zs->add_option("--limit", limit)->required();
  zs->callback([&] {
    action = [&](Emitter& e) {
      const auto S = parse_prime_set(set_text);
      auto [series, ms] = timed([&] { return partial_zeta_S(S, s, limit, series_options()); });
      e.emit("zeta-s", {{"set", set_text}, {"s", s}, {"limit", limit}}, series_rows(series), ms);
    };
  });

  auto* iw = app.add_subcommand("iwaniec", "pi(N; f) ln(N)^{3/2} / N");
  iw->add_option("--form", form_text)->required();
  iw->add_option("--limit", limit)->required();
  iw->callback([&] {
    action = [&](Emitter& e) {
      const auto f = parse_form(form_text);
      auto [points, ms] = timed([&] { return iwaniec_ratio(f, limit, series_options()); });
      std::vector<Json> rows;
      for (const auto& pt : points)
        rows.push_back(Json{{"N", pt.N}, {"count", pt.count}, {"ratio", static_cast<double>(pt.ratio)}});
      e.emit("iwaniec", {{"form", form_text}, {"limit", limit}}, rows, ms);
    };
  });

  int verify_status = kOk;
  auto* verify = app.add_subcommand("verify", "exhaustive claim verification");
  verify->add_option("claim", claim)
      ->required()
      ->check(CLI::IsMember({"two-squares", "x2-2y2", "x2-3y2", "cor1", "cor2", "cor3", "classes"}));
  verify->add_option("--limit", limit, "Scan bound (default 100000)");
  verify->callback([&] {
    action = [&](Emitter& e) {
      const u64 bound = limit ? limit : 100000;
      auto [report, ms] = timed([&] {
        if (claim == "two-squares") return verify_two_squares(bound, threads);
        if (claim == "x2-2y2") return verify_x2_2y2(bound, threads);
        if (claim == "x2-3y2") return verify_x2_3y2(bound, threads);
        if (claim == "cor1") return verify_corollary(StandardSet::S1, bound, threads);
        if (claim == "cor2") return verify_corollary(StandardSet::S2, bound, threads);
        if (claim == "cor3") return verify_corollary(StandardSet::S3, bound, threads);
        return verify_class_numbers();
      });
      Json params{{"claim", claim}};
      if (claim != "classes") params["limit"] = bound;
      e.emit("verify", params, {report_json(report)}, ms);
      if (!report.passed) verify_status = kVerificationFailed;
    };
  });

  try {
    // CLI11 consumes the vector from the back
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  try {
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw ParameterError("cannot open output file '" + out_path + "'");
    }
    Emitter emitter(out_path.empty() ? out : file, format == "csv");
    const auto start = std::chrono::steady_clock::now();
    action(emitter);
    if (level != LogLevel::quiet) {
      const std::chrono::duration<double> sec = std::chrono::steady_clock::now() - start;
      err << "weilzeta: " << app.get_subcommands().front()->get_name() << " finished in " << sec.count()
          << " s with " << effective_threads(threads) << " thread(s)\n";
    }
    return verify_status;
  } catch (const RangeError& e) {
    err << "weilzeta: range error: " << e.what() << '\n';
    return kRangeError;
  } catch (const std::invalid_argument& e) {
    err << "weilzeta: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "weilzeta: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "weilzeta: internal error: " << e.what() << '\n';
    return kRangeError;
  }
}

} // namespace weilzeta::cli
