#include <sstream>

#include <json.hpp>

#include "cohere/program.hpp"

#ifndef COHERE_VERSION
#define COHERE_VERSION "0.0.0"
#endif

namespace cohere {

const char* version() { return COHERE_VERSION; }

namespace {

using json = nlohmann::ordered_json;

json rational(const Rational& r) { return to_string(r); }

json point(std::span<const Rational> p) {
  json out = json::array();
  for (const auto& v : p) out.push_back(rational(v));
  return out;
}

json indices(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto i : v) out.push_back(i);
  return out;
}

json trace(const ZeroLayerTrace& t) {
  json out = json::array();
  for (const auto& level : t.levels) {
    out.push_back({{"active", indices(level.active)},
                   {"feasible", level.feasible},
                   {"maxima", point(level.maxima)},
                   {"zero_set", indices(level.zero_set)},
                   {"restart", indices(level.restart)}});
  }
  return out;
}

json verdict(const Verdict& v) {
  json out;
  out["status"] = to_string(v.status);
  out["certificate"] = v.certificate.empty() ? json(nullptr) : json(v.certificate);
  out["premises_used"] = indices(v.premises_used);
  out["witness"] = v.witness ? point(*v.witness) : json(nullptr);
  if (v.counterexample) {
    out["counterexample"] = {{"point", point(v.counterexample->point)},
                             {"z", rational(v.counterexample->z)}};
  } else {
    out["counterexample"] = nullptr;
  }
  out["candidates_checked"] = v.candidates_checked;
  return out;
}

json bounds(const PropagationResult& r, bool with_trace) {
  json out;
  out["z_lo"] = rational(r.interval.lo());
  out["z_hi"] = rational(r.interval.hi());
  out["branch"] = r.branch;
  if (with_trace) out["trace"] = {{"lower", trace(r.lower_trace)}, {"upper", trace(r.upper_trace)}};
  return out;
}

json extension(const ExtensionSet& e) {
  json inner = json::array();
  for (const auto& w : e.inner) {
    inner.push_back({{"lo", rational(w.interval.lo())},
                     {"hi", rational(w.interval.hi())},
                     {"lo_witness", point(w.lo_witness)},
                     {"hi_witness", point(w.hi_witness)}});
  }
  return {{"inner", inner},
          {"outer", {{"lo", rational(e.outer.lo())}, {"hi", rational(e.outer.hi())}}},
          {"candidates_checked", e.candidates_checked}};
}

const char* kind_name(const Query& q) {
  switch (q.body.index()) {
    case 0: return "pconsistent";
    case 1: return "entails";
    case 2: return "bounds";
    default: return "extension";
  }
}

void text_verdict(std::ostream& out, const Verdict& v) {
  out << "  status: " << to_string(v.status) << '\n';
  if (!v.certificate.empty()) {
    out << "  certificate: " << v.certificate << '\n';
    out << "  premises:";
    for (auto i : v.premises_used) out << ' ' << i + 1;
    out << '\n';
  }
  if (v.witness) out << "  witness: " << to_string(*v.witness) << '\n';
  if (v.counterexample) {
    out << "  counterexample: " << to_string(v.counterexample->point)
        << " extends with z = " << to_string(v.counterexample->z) << '\n';
  }
  if (v.status == VerdictStatus::Unknown) {
    out << "  candidates checked: " << v.candidates_checked << '\n';
  }
}

void text_trace(std::ostream& out, const char* side, const ZeroLayerTrace& t) {
  for (std::size_t k = 0; k < t.levels.size(); ++k) {
    const auto& level = t.levels[k];
    out << "    " << side << " pass " << k + 1 << ": active";
    for (auto i : level.active) out << ' ' << i + 1;
    out << (level.feasible ? ", feasible" : ", infeasible");
    if (!level.maxima.empty()) out << ", maxima " << to_string(level.maxima);
    out << '\n';
  }
}

}  // namespace

std::string to_text(const Report& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    const auto& r = report.results[i];
    out << "query " << i + 1 << " (line " << r.query->line << "): "
        << to_text(*r.query).substr(7) << '\n';
    if (r.error) {
      out << "  error: " << *r.error << '\n';
      continue;
    }
    if (r.verdict) text_verdict(out, *r.verdict);
    if (r.bounds) {
      out << "  interval: " << r.bounds->interval.to_string() << '\n';
      out << "  branch:";
      for (const auto& b : r.bounds->branch) out << ' ' << b;
      out << '\n';
      if (report.options.trace) {
        text_trace(out, "lower", r.bounds->lower_trace);
        text_trace(out, "upper", r.bounds->upper_trace);
      }
    }
    if (r.extension) {
      out << "  inner:";
      for (const auto& w : r.extension->inner) out << ' ' << w.interval.to_string();
      out << '\n';
      out << "  outer: " << r.extension->outer.to_string() << '\n';
    }
  }
  return out.str();
}

std::string to_json(const Report& report) {
  json queries = json::array();
  for (const auto& r : report.results) {
    json q;
    q["line"] = r.query->line;
    q["kind"] = kind_name(*r.query);
    q["query"] = to_text(*r.query).substr(7);
    if (r.error) q["error"] = *r.error;
    if (r.verdict) q["verdict"] = verdict(*r.verdict);
    if (r.bounds) q["bounds"] = bounds(*r.bounds, report.options.trace);
    if (r.extension) q["extension"] = extension(*r.extension);
    queries.push_back(std::move(q));
  }
  json out;
  out["version"] = version();
  out["seed"] = report.options.seed;
  out["budget"] = report.options.budget;
  out["grid"] = report.options.grid;
  out["ok"] = report.ok();
  out["queries"] = std::move(queries);
  return out.dump(2) + "\n";
}

}  // namespace cohere
