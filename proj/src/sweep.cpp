#include "fences/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "fences/error.hpp"
#include "fences/rank.hpp"

namespace fences {

namespace {

using Json = nlohmann::ordered_json;

std::vector<int> parts_of(const Composition& beta) {
  return {beta.parts().begin(), beta.parts().end()};
}

Json rank_json(const RankSequence& r) { return Json::parse(to_json(r)); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json heavy_json(const Composition& beta, bool& ok) {
  const HeavyReport report = verify_theorem_heavy(beta);
  ok = report.ok;
  Json doc;
  doc["case"] = to_string(report.heavy_case);
  doc["predicted"] = to_string(report.predicted);
  doc["observed"] = to_string(report.observed);
  if (report.inner) doc["inner"] = to_string(*report.inner);
  doc["r"] = rank_json(report.r);
  return doc;
}

Json fbsym_json(const Composition& beta, bool& ok) {
  const CircularSymmetryReport report = verify_circular_symmetry(beta);
  ok = report.ok;
  Json doc;
  doc["palindromic"] = report.palindromic;
  doc["witness"] = optional_json(report.witness);
  doc["bijection_ok"] = optional_json(report.bijection_ok);
  doc["r"] = rank_json(report.r);
  return doc;
}

Json fbuni_json(const Composition& beta, bool& ok) {
  const CircularUnimodalityReport report = verify_conjecture_fbuni(beta);
  ok = report.ok;
  Json doc;
  doc["unimodal"] = report.unimodal;
  doc["exceptional_shape"] = report.exceptional_shape;
  doc["witness"] = optional_json(report.witness);
  doc["r"] = rank_json(report.r);
  return doc;
}

Json partial_symmetry_json(const Composition& beta, bool& ok) {
  const PartialSymmetryReport report = verify_partial_symmetry(beta);
  ok = report.ok;
  Json doc;
  doc["n"] = report.n;
  doc["max_k"] = report.max_k;
  Json rows = Json::array();
  for (const PartialSymmetryRow& row : report.rows) {
    rows.push_back({{"k", row.k},
                    {"ideals", Json::parse(to_json_number(row.ideals))},
                    {"filters", Json::parse(to_json_number(row.filters))},
                    {"numeric_equal", row.numeric_equal},
                    {"bijection_ok", row.bijection_ok}});
  }
  doc["rows"] = std::move(rows);
  return doc;
}

Json log_concavity_json(const LogConcavityReport& report) {
  Json doc;
  doc["log_concave"] = report.log_concave;
  doc["witness"] = optional_json(report.witness);
  doc["longest_window"] = report.longest_window;
  doc["r"] = rank_json(report.r);
  return doc;
}

Json logconcave_json(const Composition& beta, bool& ok) {
  ok = true;  // an open question: every outcome is a finding, none a failure
  Json doc;
  doc["linear"] = log_concavity_json(check_log_concavity(beta, false));
  if (beta.has_even_parts()) doc["circular"] = log_concavity_json(check_log_concavity(beta, true));
  return doc;
}

}  // namespace

SweepMode parse_sweep_mode(const std::string& text) {
  if (text == "heavy") return SweepMode::heavy;
  if (text == "fbsym") return SweepMode::fbsym;
  if (text == "fbuni") return SweepMode::fbuni;
  if (text == "partial-symmetry") return SweepMode::partial_symmetry;
  if (text == "logconcave") return SweepMode::logconcave;
  throw FenceError(ErrorCode::precondition, "unknown sweep mode '" + text + "'");
}

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::heavy: return "heavy";
    case SweepMode::fbsym: return "fbsym";
    case SweepMode::fbuni: return "fbuni";
    case SweepMode::partial_symmetry: return "partial-symmetry";
    case SweepMode::logconcave: return "logconcave";
  }
  return "unknown";
}

bool sweep_applies(SweepMode mode, const Composition& beta) {
  switch (mode) {
    case SweepMode::fbsym:
    case SweepMode::fbuni: return beta.has_even_parts();
    case SweepMode::partial_symmetry: return !beta.has_even_parts();
    case SweepMode::heavy:
    case SweepMode::logconcave: return true;
  }
  return false;
}

std::vector<Composition> sweep_compositions(SweepMode mode, int max_total) {
  std::vector<Composition> out;
  for (int total = 1; total <= max_total; ++total) {
    for (Composition& beta : compositions_of(total)) {
      if (sweep_applies(mode, beta)) out.push_back(std::move(beta));
    }
  }
  return out;
}

SweepFinding sweep_one(SweepMode mode, const Composition& beta) {
  bool ok = false;
  Json body;
  switch (mode) {
    case SweepMode::heavy: body = heavy_json(beta, ok); break;
    case SweepMode::fbsym: body = fbsym_json(beta, ok); break;
    case SweepMode::fbuni: body = fbuni_json(beta, ok); break;
    case SweepMode::partial_symmetry: body = partial_symmetry_json(beta, ok); break;
    case SweepMode::logconcave: body = logconcave_json(beta, ok); break;
  }
  Json doc;
  doc["mode"] = to_string(mode);
  doc["beta"] = parts_of(beta);
  doc["ok"] = ok;
  doc.update(body);
  return {doc.dump(), ok};
}

SweepSummary run_sweep(const SweepOptions& options,
                       const std::function<void(const SweepFinding&)>& sink) {
  std::vector<Composition> work = sweep_compositions(options.mode, options.max_total);
  if (options.resume_after) {
    const auto it = std::find(work.begin(), work.end(), *options.resume_after);
    if (it == work.end()) {
      throw FenceError(ErrorCode::precondition,
                       "resume point " + options.resume_after->to_string() +
                           " is not part of this sweep");
    }
    work.erase(work.begin(), it + 1);
  }

  SweepSummary summary;
  auto emit = [&](const SweepFinding& f) {
    ++summary.checked;
    if (!f.ok) ++summary.failures;
    sink(f);
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(work.size())));
  if (jobs <= 1) {
    for (const Composition& beta : work) emit(sweep_one(options.mode, beta));
    return summary;
  }

  std::vector<std::optional<SweepFinding>> slots(work.size());
  std::exception_ptr error;
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size() || abort) return;
      try {
        SweepFinding f = sweep_one(options.mode, work[i]);
        std::lock_guard lock(mutex);
        slots[i] = std::move(f);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        abort = true;
      }
      ready.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);

  for (std::size_t i = 0; i < work.size(); ++i) {
    std::optional<SweepFinding> finding;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[i].has_value() || error; });
      if (error) break;
      finding = std::move(slots[i]);
    }
    emit(*finding);
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
  return summary;
}

}  // namespace fences
