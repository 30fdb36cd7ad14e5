#include "superchab/commands.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "superchab/errors.hpp"

namespace superchab {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"genus", "prime", "bound", "analyze", "search", "verify"};
  return names;
}

namespace {

Json header(const std::string& command) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["command"] = command;
  return out;
}

long require_rank(const CurveInput& in, const char* command) {
  if (!in.rank) throw HypothesisError({std::string(command) + " needs a user-asserted rank (rank=<int>)"});
  return *in.rank;
}

CommandResult genus_command(const SuperellipticCurve& curve) {
  CommandResult out{header("genus"), kExitOk, {}};
  const Validation v = validate(curve);
  out.json["curve"] = curve_json(curve);
  out.json["s"] = v.stats.s;
  out.json["genus"] = genus(curve);
  out.json["hypotheses"] = Json{{"ok", v.ok()}, {"violations", v.violations}};
  out.summary = "genus " + std::to_string(genus(curve));
  return out;
}

CommandResult prime_command(long m) {
  CommandResult out{header("prime"), kExitOk, {}};
  const ChabautyPrime cp = chabauty_prime(m);
  out.json["m"] = m;
  out.json["prime"] = cp.prime;
  out.json["cap"] = cp.cap.fits_slong_p() ? Json(cp.cap.get_si()) : Json(cp.cap.get_str());
  out.json["within_cap"] = cp.within_cap;
  out.summary = "p = " + std::to_string(cp.prime) + (cp.within_cap ? "" : " (exceeds 2^phi(m) - 1)");
  return out;
}

CommandResult bound_command(const SuperellipticCurve& curve, const CurveInput& in) {
  const long r = require_rank(in, "bound");
  std::vector<std::string> violated = validate(curve).violations;
  if (curve.m() <= 2) violated.push_back("m > 2 (m = " + std::to_string(curve.m()) + ")");
  else if (!rank_hypothesis(curve.degree(), curve.m(), r)) {
    violated.push_back("r <= floor(deg/m) - 4 (r = " + std::to_string(r) + ", user-asserted)");
  }
  if (!violated.empty()) throw HypothesisError(violated);
  const BoundReport report = bound_report(curve, r);
  CommandResult out{header("bound"), kExitOk, {}};
  out.json["curve"] = curve_json(curve);
  out.json.update(bound_json(report));
  out.summary = "#C(Q) < " + std::to_string(report.theorem3_total) + " (sharp <= " +
                std::to_string(report.sharp_total) + ") for user-asserted r = " + std::to_string(r);
  return out;
}

long analysis_prime(const CurveInput& in) {
  if (!in.prime) return chabauty_prime(in.m).prime;
  const long p = *in.prime;
  if (p < 2 || !is_prime(p)) throw HypothesisError({"prime override " + std::to_string(p) + " is not prime"});
  if (p % in.m != 1) {
    throw HypothesisError({"prime override must satisfy p = 1 mod m (p = " + std::to_string(p) + ")"});
  }
  return p;
}

CommandResult analyze_command(const SuperellipticCurve& curve, const CurveInput& in) {
  const PadicContext ctx(analysis_prime(in), in.precision);
  const GeometryReport geo = analyze_geometry(curve, ctx);
  CommandResult out{header("analyze"), kExitOk, {}};
  out.json["curve"] = curve_json(curve);
  out.json["prime"] = ctx.prime();
  out.json["precision"] = ctx.precision();
  out.json["genus"] = genus(curve);
  Json points = Json::array();
  for (const auto& b : geo.locus.points) {
    Json pt;
    pt["theta"] = b.rational ? Json(fraction(*b.rational)) : padic_json(b.theta);
    pt["multiplicity"] = b.multiplicity;
    points.push_back(pt);
  }
  out.json["branch_points"] = points;
  out.json["infinity_is_branch"] = geo.locus.infinity_is_branch;
  out.json["unanalyzed"] = geo.locus.unanalyzed;
  out.json["orbit_count"] = geo.orbit_count;
  out.json["orbit_cap"] = geo.orbit_cap;
  Json annuli = Json::array();
  long charted = 0;
  for (const auto& a : geo.annuli) {
    const AnnulusCharts charts = parameterize_annulus(curve, geo.locus, a, ctx);
    charted += charts.verdict == ChartVerdict::charted;
    annuli.push_back(annulus_json(a, charts));
  }
  out.json["annuli"] = annuli;
  std::ostringstream s;
  s << geo.annuli.size() << " annuli (" << charted << " charted) over Q_" << ctx.prime();
  if (!geo.locus.complete()) s << "; " << geo.locus.unanalyzed.size() << " factor(s) unanalyzed";
  out.summary = s.str();
  return out;
}

CommandResult search_command(const SuperellipticCurve& curve, const CurveInput& in) {
  const SearchReport report = enumerate_points(curve, in.height);
  CommandResult out{header("search"), kExitOk, {}};
  out.json["curve"] = curve_json(curve);
  out.json.update(search_json(report));
  out.summary = std::to_string(report.count()) + " affine point(s), " + std::to_string(report.infinity_count) +
                " at infinity, height <= " + std::to_string(in.height);
  return out;
}

CommandResult verify_command(const SuperellipticCurve& curve, const CurveInput& in) {
  const long r = require_rank(in, "verify");
  const SearchReport report = verify_bound(curve, r, in.height);
  CommandResult out{header("verify"), kExitOk, {}};
  out.json["curve"] = curve_json(curve);
  out.json.update(search_json(report));
  const auto& b = *report.bound;
  const long total = report.count() + report.infinity_count;
  if (!b.satisfied) {
    out.exit_code = kExitVerification;
    out.summary = "BOUND VIOLATED: " + std::to_string(total) + " points but bound " +
                  std::to_string(b.theorem3_total) + "; the implementation or the asserted rank is wrong";
  } else {
    out.summary = std::to_string(total) + " point(s) < " + std::to_string(b.theorem3_total);
  }
  return out;
}

CommandResult failure(const std::string& command, int code, const std::string& kind, const std::string& message,
                      Json extra = Json::object()) {
  CommandResult out{header(command), code, kind + ": " + message};
  Json err{{"kind", kind}, {"message", message}};
  err.update(extra);
  out.json["error"] = err;
  return out;
}

}  // namespace

CommandResult run_command(const std::string& command, const CurveInput& in) {
  if (command == "prime") return prime_command(in.m);
  const SuperellipticCurve curve(in.m, in.f);
  if (command == "genus") return genus_command(curve);
  if (command == "bound") return bound_command(curve, in);
  if (command == "analyze") return analyze_command(curve, in);
  if (command == "search") return search_command(curve, in);
  if (command == "verify") return verify_command(curve, in);
  throw DomainError("unknown command '" + command + "'");
}

CommandResult run_text(const std::string& command, const std::string& text) {
  try {
    return run_command(command, parse_curve_input(text));
  } catch (const ParseError& e) {
    return failure(command, kExitParse, "parse", e.what(), Json{{"line", e.line()}, {"column", e.column()}});
  } catch (const HypothesisError& e) {
    return failure(command, kExitHypothesis, "hypothesis", e.what(), Json{{"violated", e.violated()}});
  } catch (const DomainError& e) {
    return failure(command, kExitHypothesis, "domain", e.what());
  } catch (const VerificationError& e) {
    return failure(command, kExitVerification, "verification", e.what());
  } catch (const PrecisionError& e) {
    return failure(command, kExitVerification, "precision", e.what());
  }
}

std::vector<CommandResult> run_batch(const std::string& command, const std::vector<std::string>& lines,
                                     unsigned threads) {
  std::vector<CommandResult> out(lines.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < lines.size(); i = next++) out[i] = run_text(command, lines[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<size_t>(threads, lines.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace superchab
