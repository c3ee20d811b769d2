#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fences/bijections.hpp"
#include "fences/chains.hpp"
#include "fences/encodings.hpp"
#include "fences/error.hpp"
#include "fences/rank.hpp"
#include "fences/rowmotion.hpp"
#include "fences/sweep.hpp"

namespace fences::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by a command that ran fine but whose check did not hold.
struct CheckFailed {};

Composition composition_arg(const std::string& text, const std::string& flag) {
  try {
    return Composition::parse(text);
  } catch (const FenceError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<int> list_arg(const std::string& text, const std::string& flag) {
  if (text.empty()) return {};
  try {
    return parse_int_list(text);
  } catch (const FenceError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string join(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parts_of(const Composition& c) { return {c.parts().begin(), c.parts().end()}; }

Json parse_json(const std::string& text) { return Json::parse(text); }

// ---------------------------------------------------------------------------
// build

struct PosetArgs {
  std::string beta;
  std::string delta;
  bool circular = false;
};

void add_poset_options(CLI::App* cmd, PosetArgs& args, bool allow_gate = true) {
  auto* beta = cmd->add_option("--beta", args.beta, "composition, e.g. 6,2,1,2,3,1,6");
  cmd->add_flag("--circular", args.circular, "circular fence (even number of parts)");
  if (allow_gate) {
    auto* delta = cmd->add_option("--delta", args.delta, "gate composition");
    beta->excludes(delta);
  }
}

Poset poset_from(const PosetArgs& args) {
  if (!args.delta.empty()) {
    if (args.circular) throw UsageError("--circular does not apply to gates");
    return build_gate(composition_arg(args.delta, "--delta"));
  }
  if (args.beta.empty()) throw UsageError("--beta or --delta is required");
  const Composition beta = composition_arg(args.beta, "--beta");
  return args.circular ? build_circular_fence(beta) : build_fence(beta);
}

std::string family_name(const Poset& p) {
  switch (p.family()) {
    case PosetFamily::fence: return "fence";
    case PosetFamily::circular_fence: return "circular fence";
    case PosetFamily::gate: return "gate";
  }
  return "poset";
}

struct BuildArgs {
  PosetArgs poset;
  bool dual = false;
  bool json = false;
  bool edges = false;
};

int run_build(const BuildArgs& args, std::ostream& out) {
  Poset poset = poset_from(args.poset);
  if (args.dual) poset = dual(poset);
  if (args.json) {
    out << to_json(poset, 2) << '\n';
    return kOk;
  }
  if (args.edges) {
    out << to_edge_list(poset);
    return kOk;
  }
  out << family_name(poset) << ' ' << poset.composition().to_string();
  if (poset.mirrored_dual()) out << " (dual)";
  if (poset.degenerate()) out << " (degenerate: repeated cover collapsed)";
  out << "\nelements: " << poset.size() << "\ncovers:";
  for (const Cover& c : poset.covers()) out << " x" << c.lower + 1 << "<x" << c.upper + 1;
  out << '\n';
  const bool has_params = poset.family() != PosetFamily::gate && !poset.mirrored_dual() &&
                          poset.composition().has_even_parts() == poset.circular();
  if (has_params) {
    const AlphaDeltaParams p = alpha_delta(poset);
    out << "alpha: " << join(p.alpha) << "\ndelta: " << join(p.delta) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// rank / classify

void print_classification(const SequenceClassification& c, std::ostream& out) {
  auto line = [&](const char* name, bool holds, const std::optional<int>& witness) {
    out << name << ": " << (holds ? "yes" : "no");
    if (witness) out << " (index " << *witness << ")";
    out << '\n';
  };
  line("symmetric", c.symmetric, c.symmetric_witness);
  line("unimodal", c.unimodal, c.unimodal_witness);
  line("top heavy", c.top_heavy, c.top_heavy_witness);
  line("bottom heavy", c.bottom_heavy, c.bottom_heavy_witness);
  line("top interlacing", c.top_interlacing, c.top_interlacing_witness);
  line("bottom interlacing", c.bottom_interlacing, c.bottom_interlacing_witness);
  line("log-concave", c.log_concave, c.log_concave_witness);
  out << "kind: " << to_string(c.kind()) << '\n';
}

struct RankArgs {
  PosetArgs poset;
  bool json = false;
};

int run_rank(const RankArgs& args, std::ostream& out) {
  const Poset poset = poset_from(args.poset);
  const RankSequence r = rank_sequence(poset);
  const SequenceClassification c = classify(r);
  if (args.json) {
    Json doc;
    doc[poset.family() == PosetFamily::gate ? "delta" : "beta"] = parts_of(poset.composition());
    doc["circular"] = poset.circular();
    doc["n"] = poset.size();
    doc["r"] = parse_json(to_json(r));
    doc["classification"] = parse_json(classification_json(c));
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "r: " << r.to_string() << "\nn: " << poset.size() << "\nideals: " << r.total().str()
      << '\n';
  print_classification(c, out);
  return kOk;
}

struct ClassifyArgs {
  PosetArgs poset;
  std::string seq;
  bool json = false;
};

int run_classify(const ClassifyArgs& args, std::ostream& out) {
  RankSequence r;
  if (!args.seq.empty()) {
    for (int v : list_arg(args.seq, "--seq")) {
      if (v < 0) throw UsageError("--seq: entries must be nonnegative");
      r.coefficients.emplace_back(v);
    }
  } else {
    r = rank_sequence(poset_from(args.poset));
  }
  const SequenceClassification c = classify(r);
  if (args.json) {
    Json doc;
    doc["r"] = parse_json(to_json(r));
    doc["classification"] = parse_json(classification_json(c));
    doc["longest_log_concave_window"] = longest_log_concave_window(r);
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "sequence: " << r.to_string() << '\n';
  print_classification(c, out);
  out << "longest log-concave window: " << longest_log_concave_window(r) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// bijection

struct BijectionArgs {
  std::string map;
  std::string beta;
  std::string delta;
  std::string asc;
  std::string desc;
  std::string elements;
  std::optional<int> k;
  bool restricted = false;
  bool trace = false;
  bool verify = false;
  bool json = false;
};

std::string step_line(const TraceStep& s) {
  std::string line = s.step;
  line.resize(std::max<std::size_t>(line.size() + 1, 8), ' ');
  if (!s.asc.empty()) line += "asc: " + join(s.asc) + "  ";
  line += "desc: " + join(s.desc);
  if (!s.note.empty()) line += "  (" + s.note + ")";
  return line;
}

template <Shape S, Side D>
std::optional<ElementSet> elements_of(const SequenceEncoding<S, D>& enc) {
  if (encoding_poset(S, enc.composition).size() > kMaxSubsetElements) return std::nullopt;
  return decode(enc);
}

template <Shape S, Side D>
Json encoding_doc(const SequenceEncoding<S, D>& enc) {
  return parse_json(to_json(enc));
}

template <Shape S, Side D>
std::string encoding_inline(const SequenceEncoding<S, D>& enc) {
  if (enc.asc.empty()) return join(enc.desc);
  return join(enc.asc) + " | " + join(enc.desc);
}

template <Shape S, Side D>
SequenceEncoding<S, D> source_encoding(const Composition& comp, const BijectionArgs& args) {
  if (!args.elements.empty()) {
    if (!args.asc.empty() || !args.desc.empty()) {
      throw UsageError("give either --elements or the encoding sequences, not both");
    }
    const Poset poset = encoding_poset(S, comp);
    const std::vector<int> labels = list_arg(args.elements, "--elements");
    return encode<S, D>(comp, poset.subset(labels));
  }
  constexpr bool has_asc = S == Shape::fence || S == Shape::circular;
  if (!has_asc && !args.asc.empty()) {
    throw UsageError("this map takes only the descending sequence");
  }
  return make_encoding<S, D>(comp, list_arg(args.asc, "ascending sequence"),
                             list_arg(args.desc, "descending sequence"));
}

template <Shape S, Side D, class Map>
int single_map(const Composition& comp, const BijectionArgs& args, Map map, std::ostream& out) {
  const SequenceEncoding<S, D> input = source_encoding<S, D>(comp, args);
  if (args.restricted) require_valid(input, true);
  Trace trace;
  const MapOptions options{args.trace ? &trace : nullptr, args.verify};
  const auto output = map(input, options);
  const auto in_set = elements_of(input);
  const auto out_set = elements_of(output);

  if (args.json) {
    Json doc;
    doc["map"] = args.map;
    doc["composition"] = parts_of(comp);
    doc["input"] = encoding_doc(input);
    doc["output"] = encoding_doc(output);
    if (in_set) doc["input_elements"] = in_set->labels();
    if (out_set) doc["output_elements"] = out_set->labels();
    doc["size"] = input.total();
    if (args.trace) doc["trace"] = parse_json(to_json(trace));
    out << doc.dump() << '\n';
    return kOk;
  }
  out << pretty(input);
  if (in_set) out << "elements: " << in_set->to_string() << '\n';
  for (const TraceStep& s : trace) out << step_line(s) << '\n';
  out << pretty(output);
  if (out_set) out << "elements: " << out_set->to_string() << '\n';
  return kOk;
}

template <Shape S, Side D, class Map>
int all_of_size(const Composition& comp, const BijectionArgs& args, Map map, std::ostream& out) {
  const int k = *args.k;
  if (!args.elements.empty() || !args.asc.empty() || !args.desc.empty()) {
    throw UsageError("--k maps every encoding of that size; drop the explicit input");
  }
  if constexpr (S == Shape::fence) {
    const int bound = std::min(comp.front(), comp.back());
    if (!args.restricted && k > bound) {
      throw FenceError(ErrorCode::precondition,
                       "k=" + std::to_string(k) + " exceeds min(first part, last part) = " +
                           std::to_string(bound) + "; add --restricted to map restricted inputs");
    }
  }
  constexpr bool gate_like = S == Shape::gate;
  const bool restricted = gate_like || args.restricted;
  const MapOptions options{nullptr, args.verify};
  Json pairs = Json::array();
  std::set<std::pair<std::vector<int>, std::vector<int>>> images;
  std::size_t count = 0;
  for_each_encoding<S, D>(comp, k, restricted, [&](const SequenceEncoding<S, D>& input) {
    const auto output = map(input, options);
    images.emplace(output.asc, output.desc);
    ++count;
    if (args.json) {
      pairs.push_back({{"input", encoding_doc(input)}, {"output", encoding_doc(output)}});
    } else {
      out << encoding_inline(input) << "  ->  " << encoding_inline(output) << '\n';
    }
  });
  const bool injective = images.size() == count;
  if (args.json) {
    Json doc;
    doc["map"] = args.map;
    doc["composition"] = parts_of(comp);
    doc["k"] = k;
    doc["restricted"] = restricted;
    doc["count"] = count;
    doc["injective"] = injective;
    doc["pairs"] = std::move(pairs);
    out << doc.dump() << '\n';
  } else {
    out << count << " inputs, " << images.size() << " distinct outputs\n";
  }
  if (!injective) throw CheckFailed{};
  return kOk;
}

template <Shape S, Side D, class Map>
int dispatch_map(const Composition& comp, const BijectionArgs& args, Map map, std::ostream& out) {
  if (args.k) return all_of_size<S, D>(comp, args, map, out);
  return single_map<S, D>(comp, args, map, out);
}

int run_bijection(const BijectionArgs& args, std::ostream& out) {
  const bool gate_like = args.map.starts_with("phi");
  const std::string& comp_text = gate_like ? args.delta : args.beta;
  if (comp_text.empty()) throw UsageError(gate_like ? "--delta is required" : "--beta is required");
  if (gate_like && !args.beta.empty()) throw UsageError(args.map + " takes --delta, not --beta");
  if (!gate_like && !args.delta.empty()) throw UsageError(args.map + " takes --beta, not --delta");
  const Composition comp = composition_arg(comp_text, gate_like ? "--delta" : "--beta");

  if (args.map == "phi") {
    return dispatch_map<Shape::gate, Side::ideal>(
        comp, args, [](const GateIdeal& e, const MapOptions& o) { return gate_bijection(e, o); }, out);
  }
  if (args.map == "phi-inv") {
    return dispatch_map<Shape::gate, Side::filter>(
        comp, args,
        [](const GateFilter& e, const MapOptions& o) { return gate_bijection_inverse(e, o); }, out);
  }
  if (args.map == "phi-bar") {
    return dispatch_map<Shape::narrow_circular, Side::ideal>(
        comp, args,
        [](const NarrowIdeal& e, const MapOptions& o) { return narrow_circular_bijection(e, o); },
        out);
  }
  if (args.map == "phi-bar-inv") {
    return dispatch_map<Shape::narrow_circular, Side::filter>(
        comp, args,
        [](const NarrowFilter& e, const MapOptions& o) {
          return narrow_circular_bijection_inverse(e, o);
        },
        out);
  }
  if (args.map == "Phi") {
    return dispatch_map<Shape::fence, Side::ideal>(
        comp, args, [](const FenceIdeal& e, const MapOptions& o) { return fence_bijection(e, o); },
        out);
  }
  if (args.map == "Phi-inv") {
    return dispatch_map<Shape::fence, Side::filter>(
        comp, args,
        [](const FenceFilter& e, const MapOptions& o) { return fence_bijection_inverse(e, o); },
        out);
  }
  if (args.map == "Phi-bar") {
    return dispatch_map<Shape::circular, Side::ideal>(
        comp, args,
        [](const CircularIdeal& e, const MapOptions& o) { return circular_bijection(e, o); }, out);
  }
  if (args.map == "Phi-bar-inv") {
    return dispatch_map<Shape::circular, Side::filter>(
        comp, args,
        [](const CircularFilter& e, const MapOptions& o) {
          return circular_bijection_inverse(e, o);
        },
        out);
  }
  throw UsageError("unknown map '" + args.map + "'");
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string mode_positional;
  std::string mode;
  int max_total = 12;
  unsigned jobs = 1;
  std::string resume_after;
  std::string beta;
};

int run_sweep_command(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  if (!args.mode.empty() && !args.mode_positional.empty() && args.mode != args.mode_positional) {
    throw UsageError("conflicting sweep modes");
  }
  const std::string text = args.mode.empty() ? args.mode_positional : args.mode;
  if (text.empty()) throw UsageError("a sweep mode is required");
  SweepMode mode;
  try {
    mode = parse_sweep_mode(text);
  } catch (const FenceError& e) {
    throw UsageError(e.what());
  }
  if (!args.beta.empty()) {
    const Composition beta = composition_arg(args.beta, "--beta");
    if (!sweep_applies(mode, beta)) {
      throw FenceError(ErrorCode::parity,
                       "mode " + to_string(mode) + " does not apply to " + beta.to_string());
    }
    const SweepFinding f = sweep_one(mode, beta);
    out << f.json << '\n';
    if (!f.ok) throw CheckFailed{};
    return kOk;
  }
  SweepOptions options;
  options.mode = mode;
  options.max_total = args.max_total;
  options.jobs = args.jobs;
  if (!args.resume_after.empty()) {
    options.resume_after = composition_arg(args.resume_after, "--resume-after");
  }
  const SweepSummary summary =
      run_sweep(options, [&](const SweepFinding& f) { out << f.json << '\n' << std::flush; });
  err << "checked " << summary.checked << ", failures " << summary.failures << '\n';
  if (summary.failures) throw CheckFailed{};
  return kOk;
}

// ---------------------------------------------------------------------------
// chains

struct ChainsArgs {
  std::string beta;
  std::string search = "auto";
  std::uint64_t budget = 1'000'000;
  std::string extension;
  bool json = false;
};

void print_decomposition(const ChainDecomposition& cd, std::ostream& out) {
  out << "kind: " << to_string(cd.kind) << "\nchains: " << cd.chains.size() << '\n';
  for (const SaturatedChain& c : cd.chains) {
    const auto center = c.center();
    out << "  ranks " << c.bottom_rank() << ".." << c.top_rank() << ", center " << center.numerator();
    if (center.denominator() != 1) out << '/' << center.denominator();
    out << ':';
    for (ElementSet s : c.ideals) out << ' ' << s.to_string();
    out << '\n';
  }
}

int run_chains(const ChainsArgs& args, std::ostream& out) {
  if (args.beta.empty()) throw UsageError("--beta is required");
  const Composition beta = composition_arg(args.beta, "--beta");
  const Poset poset = build_fence(beta);

  if (!args.extension.empty()) {
    const LinearExtension ext =
        LinearExtension::from_labels(poset, list_arg(args.extension, "--extension"));
    const ChainDecomposition cd = lcd(poset, ext);
    if (args.json) {
      Json doc;
      doc["beta"] = parts_of(beta);
      doc["extension"] = ext.labels();
      doc["decomposition"] = parse_json(to_json(cd));
      out << doc.dump() << '\n';
    } else {
      out << "extension: " << join(ext.labels()) << '\n';
      print_decomposition(cd, out);
    }
    return kOk;
  }

  DecompositionKind target;
  std::string reason;
  if (args.search == "auto") {
    const SequenceKind predicted = predicted_kind(beta);
    const auto kind = decomposition_for(predicted);
    if (!kind) throw FenceError(ErrorCode::precondition, "no decomposition kind is predicted");
    target = *kind;
    reason = "predicted " + to_string(predicted);
  } else {
    try {
      target = parse_decomposition_kind(args.search);
    } catch (const FenceError& e) {
      throw UsageError(std::string("--search: ") + e.what());
    }
  }
  const ExtensionSearchResult result = search_extensions(poset, target, args.budget);
  if (args.json) {
    Json doc;
    doc["beta"] = parts_of(beta);
    doc["target"] = to_string(target);
    doc["examined"] = result.examined;
    doc["exhausted"] = result.exhausted;
    doc["budget_exhausted"] = result.budget_exhausted;
    doc["witness"] = result.witness ? Json(result.witness->labels()) : Json(nullptr);
    doc["decomposition"] =
        result.decomposition ? parse_json(to_json(*result.decomposition)) : Json(nullptr);
    out << doc.dump() << '\n';
  } else {
    out << "target: " << to_string(target);
    if (!reason.empty()) out << " (" << reason << ')';
    out << "\nexamined: " << result.examined << '\n';
    if (result.witness) {
      out << "witness: " << join(result.witness->labels()) << '\n';
      print_decomposition(*result.decomposition, out);
    } else {
      out << (result.budget_exhausted ? "budget exhausted without a witness\n"
                                      : "no linear extension gives this kind\n");
    }
  }
  if (!result.witness) throw CheckFailed{};
  return kOk;
}

// ---------------------------------------------------------------------------
// rowmotion

struct RowmotionArgs {
  PosetArgs poset;
  bool check_mesic = false;
  std::string c;
  bool json = false;
};

Rational rational_arg(const std::string& text) {
  const auto slash = text.find('/');
  auto number = [&](std::string_view part) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw UsageError("--c: expected an integer or a fraction like 5/2, got '" + text + "'");
    }
    return v;
  };
  const std::string_view view(text);
  if (slash == std::string::npos) return Rational(number(view));
  const long long den = number(view.substr(slash + 1));
  if (den == 0) throw UsageError("--c: zero denominator");
  return Rational(number(view.substr(0, slash))) / den;
}

int run_rowmotion(const RowmotionArgs& args, std::ostream& out) {
  const Poset poset = poset_from(args.poset);
  if (!args.check_mesic) {
    const std::vector<Orbit> all = orbits(poset);
    if (args.json) {
      Json list = Json::array();
      for (const Orbit& o : all) {
        Json ideals = Json::array();
        for (ElementSet s : o.ideals) ideals.push_back(s.labels());
        list.push_back({{"length", o.length()}, {"total", o.statistic_total}, {"ideals", ideals}});
      }
      out << Json{{"n", poset.size()}, {"orbits", list}}.dump() << '\n';
      return kOk;
    }
    out << all.size() << " orbits\n";
    for (const Orbit& o : all) {
      out << "length " << o.length() << ", total " << o.statistic_total << ':';
      for (ElementSet s : o.ideals) out << ' ' << s.to_string();
      out << '\n';
    }
    return kOk;
  }
  const Rational c = args.c.empty() ? Rational(poset.size()) / 2 : rational_arg(args.c);
  const MesicReport report = check_mesic(
      poset, [](ElementSet s) { return static_cast<long long>(s.size()); }, c);
  if (args.json) {
    out << to_json(report) << '\n';
  } else {
    for (const OrbitAverage& o : report.orbits) {
      out << "length " << o.length << ", total " << o.total << ", average " << o.average.str()
          << '\n';
    }
    out << "c = " << c.str() << ": " << (report.ok ? "mesic" : "not mesic") << '\n';
  }
  if (!report.ok) throw CheckFailed{};
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fence, circular fence and gate posets: rank sequences, ideal/filter bijections, "
               "chain decompositions and rowmotion.",
               "fences"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every command");

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "construct a poset and print its covers");
  add_poset_options(build_cmd, build.poset);
  build_cmd->add_flag("--dual", build.dual, "order dual, elements relabeled right to left");
  auto* build_json = build_cmd->add_flag("--json", build.json, "JSON document");
  build_cmd->add_flag("--edges", build.edges, "edge list, one 'lower upper' pair per line")
      ->excludes(build_json);

  RankArgs rank;
  auto* rank_cmd = app.add_subcommand("rank", "exact rank sequence and its classification");
  add_poset_options(rank_cmd, rank.poset);
  rank_cmd->add_flag("--json", rank.json, "JSON document");

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "classify a sequence or a rank sequence");
  add_poset_options(classify_cmd, classify_args.poset);
  classify_cmd->add_option("--seq", classify_args.seq, "comma separated nonnegative integers");
  classify_cmd->add_flag("--json", classify_args.json, "JSON document");

  BijectionArgs bij;
  auto* bij_cmd = app.add_subcommand("bijection", "apply an ideal/filter bijection");
  bij_cmd
      ->add_option("map", bij.map,
                   "phi, phi-inv, phi-bar, phi-bar-inv (gate style, --delta) or Phi, Phi-inv, "
                   "Phi-bar, Phi-bar-inv (--beta)")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "phi-bar", "phi-bar-inv", "Phi", "Phi-inv",
                             "Phi-bar", "Phi-bar-inv"}));
  bij_cmd->add_option("--beta", bij.beta, "fence or circular fence composition");
  bij_cmd->add_option("--delta", bij.delta, "gate composition (narrow circular for phi-bar)");
  auto* asc_a = bij_cmd->add_option("--a", bij.asc, "ascending counts of an ideal");
  auto* asc_b = bij_cmd->add_option("--b", bij.asc, "ascending counts of a filter");
  auto* desc_d = bij_cmd->add_option("--d", bij.desc, "descending counts of an ideal");
  auto* desc_e = bij_cmd->add_option("--e", bij.desc, "descending counts of a filter");
  asc_a->excludes(asc_b);
  desc_d->excludes(desc_e);
  bij_cmd->add_option("--elements", bij.elements, "input subset as labels, e.g. 9,10,11");
  bij_cmd->add_option("--k", bij.k, "map every input of this size")->check(CLI::NonNegativeNumber);
  bij_cmd->add_flag("--restricted", bij.restricted, "require (or enumerate) restricted inputs");
  bij_cmd->add_flag("--trace", bij.trace, "print the sequences after each step");
  bij_cmd->add_flag("--verify", bij.verify, "check step invariants while mapping");
  bij_cmd->add_flag("--json", bij.json, "JSON document");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "check a theorem or conjecture over compositions");
  const auto modes = CLI::IsMember({"heavy", "fbsym", "fbuni", "partial-symmetry", "logconcave"});
  sweep_cmd->add_option("mode_name", sweep.mode_positional, "sweep mode")->check(modes);
  sweep_cmd->add_option("--mode", sweep.mode, "sweep mode")->check(modes);
  sweep_cmd->add_option("--max-total", sweep.max_total, "largest composition total")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--resume-after", sweep.resume_after, "skip up to and including this composition");
  sweep_cmd->add_option("--beta", sweep.beta, "check a single composition");

  ChainsArgs chains;
  auto* chains_cmd = app.add_subcommand("chains", "lexicographic chain decompositions of L(beta)");
  chains_cmd->add_option("--beta", chains.beta, "fence composition")->required();
  chains_cmd->add_option("--search", chains.search, "scd, bcd, tcd or auto")
      ->check(CLI::IsMember({"scd", "bcd", "tcd", "auto"}));
  chains_cmd->add_option("--budget", chains.budget, "linear extensions to try")
      ->check(CLI::PositiveNumber);
  chains_cmd->add_option("--extension", chains.extension, "use this linear extension (labels)");
  chains_cmd->add_flag("--json", chains.json, "JSON document");

  RowmotionArgs row;
  auto* row_cmd = app.add_subcommand("rowmotion", "rowmotion orbits and homomesy");
  add_poset_options(row_cmd, row.poset);
  row_cmd->add_flag("--check-mesic", row.check_mesic, "check that #I averages c over every orbit");
  row_cmd->add_option("--c", row.c, "expected average, default n/2");
  row_cmd->add_flag("--json", row.json, "JSON document");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsage;
  }

  try {
    if (build_cmd->parsed()) return run_build(build, out);
    if (rank_cmd->parsed()) return run_rank(rank, out);
    if (classify_cmd->parsed()) return run_classify(classify_args, out);
    if (bij_cmd->parsed()) return run_bijection(bij, out);
    if (sweep_cmd->parsed()) return run_sweep_command(sweep, out, err);
    if (chains_cmd->parsed()) return run_chains(chains, out);
    if (row_cmd->parsed()) return run_rowmotion(row, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsage;
  } catch (const FenceError& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kFailure;
  } catch (const CheckFailed&) {
    return kFailure;
  }
  return kUsage;
}

}  // namespace fences::cli
