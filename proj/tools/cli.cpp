#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellseq/bellpoly.hpp"
#include "bellseq/conv.hpp"
#include "bellseq/seq.hpp"
#include "bellseq/text.hpp"

namespace bellseq::cli {
namespace {

using nlohmann::json;

enum class Format { plain, csv, json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "plain";
  bool quiet = false;

  Format kind() const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    return Format::plain;
  }
};

// Flags shared by `seq` and `conv` that describe which sequence to use.
struct SpecOptions {
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::optional<std::string> c;
  std::optional<std::string> preset;
  std::vector<std::string> params;

  void attach(CLI::App& cmd) {
    cmd.add_option("--a", a, "Integer a");
    cmd.add_option("--b", b, "Integer b");
    cmd.add_option("--c", c, "Comma-separated coefficients c_1,c_2,... (e.g. 1,2x,(1+x),-1/2)");
    cmd.add_option("--preset", preset, "fibonacci|tribonacci|jacobsthal|catalan|motzkin|fuss_catalan");
    cmd.add_option("--param", params, "Preset parameter, e.g. b=3")->allow_extra_args(false);
  }
};

template <RingElement R>
struct Source {
  BellSequenceSpec<R> spec;
  std::optional<Preset<R>> preset;
};

using AnySource = std::variant<Source<Rational>, Source<Polynomial>>;

template <RingElement R>
R parse_element(const std::string& text) {
  if constexpr (std::is_same_v<R, Rational>) {
    return parse_rational(text);
  } else {
    return parse_polynomial(text);
  }
}

template <RingElement R>
std::vector<R> parse_elements(const std::vector<std::string>& items) {
  std::vector<R> out;
  for (const auto& item : items) out.push_back(parse_element<R>(item));
  return out;
}

std::optional<std::int64_t> preset_parameter(const std::vector<std::string>& params) {
  std::optional<std::int64_t> b;
  for (const auto& param : params) {
    const auto eq = param.find('=');
    if (eq == std::string::npos || param.substr(0, eq) != "b") {
      throw UsageError("unknown preset parameter '" + param + "' (expected b=INT)");
    }
    try {
      std::size_t used = 0;
      b = std::stoll(param.substr(eq + 1), &used);
      if (used != param.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("malformed preset parameter '" + param + "'");
    }
  }
  return b;
}

AnySource resolve(const SpecOptions& opts) {
  if (opts.preset) {
    if (opts.a || opts.b || opts.c) throw UsageError("--preset cannot be combined with --a/--b/--c");
    AnyPreset chosen = preset(parse_preset_name(*opts.preset), preset_parameter(opts.params));
    return std::visit(
        [](auto&& p) -> AnySource {
          using R = std::decay_t<decltype(p.spec.c().front())>;
          return Source<R>{p.spec, p};
        },
        chosen);
  }
  if (!opts.params.empty()) throw UsageError("--param needs --preset");
  if (!opts.a || !opts.b) throw UsageError("give --preset NAME or both --a and --b");
  const auto items = split_list(opts.c.value_or(""));
  if (mentions_indeterminate(items)) {
    return Source<Polynomial>{BellSequenceSpec<Polynomial>(*opts.a, *opts.b, parse_elements<Polynomial>(items)), {}};
  }
  return Source<Rational>{BellSequenceSpec<Rational>(*opts.a, *opts.b, parse_elements<Rational>(items)), {}};
}

template <RingElement R>
std::vector<std::string> render_all(const std::vector<R>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

// seq

struct SeqOptions {
  SpecOptions spec;
  int n = 0;
  bool apply_offset = false;
};

template <RingElement R>
int emit_sequence(const Source<R>& source, const SeqOptions& opts, const GlobalOptions& global, std::ostream& out) {
  std::vector<R> values;
  if (opts.apply_offset) {
    if (!source.preset) throw UsageError("--apply-offset needs --preset");
    const int last_y = std::max(opts.n - source.preset->offset, 0);
    values = source.preset->classical(bell_transform(source.spec, last_y), opts.n);
  } else {
    values = bell_transform(source.spec, opts.n).values();
  }
  switch (global.kind()) {
    case Format::plain:
      for (const auto& v : values) out << v.to_string() << '\n';
      break;
    case Format::csv:
      out << "index,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i].to_string() << '\n';
      break;
    case Format::json:
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << json{{"kind", "sequence"}, {"ring", ring_traits<R>::name}, {"index", i}, {"value", values[i].to_string()}}
                   .dump()
            << '\n';
      }
      break;
  }
  return kExitOk;
}

// conv

struct ConvOptions {
  SpecOptions spec;
  int r = 1;
  int n = 1;
  int delta = 0;
  bool check = true;
  bool closed_only = false;
};

template <RingElement R>
int emit_convolution(const Source<R>& source, const ConvOptions& opts, const GlobalOptions& global,
                     std::ostream& out) {
  if (opts.delta > 0 && (source.spec.a() != 0 || source.spec.b() != 1)) {
    throw UsageError("shift formula stated for a=0, b=1 family");
  }
  const bool check = opts.check && !opts.closed_only;
  const SequenceWindow<R> window = bell_transform(source.spec, opts.n);
  BellTriangle<R> bell(source.spec.scaled_arguments(opts.n));

  if (global.kind() == Format::csv) out << (check ? "r,n,lhs,rhs,matched\n" : "r,n,rhs\n");
  std::size_t mismatches = 0;
  for (int n = 1; n <= opts.n; ++n) {
    const R rhs = opts.delta == 0 ? convolution_closed(source.spec, opts.r, n, bell)
                                  : shifted_convolution_closed(source.spec.c(), opts.r, n, opts.delta);
    std::optional<R> lhs;
    if (check) {
      lhs = convolution_oracle(window, opts.r, n, opts.delta);
      if (*lhs != rhs) ++mismatches;
    }
    switch (global.kind()) {
      case Format::plain:
        out << "r=" << opts.r << " n=" << n;
        if (lhs) out << " lhs=" << lhs->to_string();
        out << " rhs=" << rhs.to_string();
        if (lhs) out << (*lhs == rhs ? " ok" : " MISMATCH");
        out << '\n';
        break;
      case Format::csv:
        out << opts.r << ',' << n << ',';
        if (lhs) out << lhs->to_string() << ',';
        out << rhs.to_string();
        if (lhs) out << ',' << (*lhs == rhs ? "true" : "false");
        out << '\n';
        break;
      case Format::json: {
        json record{{"kind", "convolution"}, {"ring", ring_traits<R>::name}, {"r", opts.r},
                    {"n", n},                {"delta", opts.delta},          {"rhs", rhs.to_string()}};
        if (lhs) {
          record["lhs"] = lhs->to_string();
          record["matched"] = *lhs == rhs;
        }
        out << record.dump() << '\n';
        break;
      }
    }
  }
  if (check && !global.quiet) {
    const auto checked = static_cast<std::size_t>(opts.n);
    if (global.kind() == Format::json) {
      out << json{{"kind", "verification"}, {"checked", checked}, {"mismatches", mismatches}}.dump() << '\n';
    } else if (global.kind() == Format::plain) {
      out << "verification: " << checked - mismatches << '/' << checked << " matched\n";
    }
  }
  return verification_exit_code(mismatches);
}

// decompose

struct DecomposeOptions {
  std::string coeffs;
  std::string init;
  int n = 0;
};

template <RingElement R>
int emit_decomposition(const std::vector<std::string>& coeffs, const std::vector<std::string>& init,
                       const DecomposeOptions& opts, const GlobalOptions& global, std::ostream& out) {
  const RecurrenceSpec<R> rec(parse_elements<R>(coeffs), parse_elements<R>(init));
  const Decomposition<R> result = decompose(rec, opts.n);
  const bool holds = rec.satisfied_by(result.reconstruction);
  const auto lambdas = render_all(result.lambdas);
  const auto sequence = render_all(result.reconstruction);
  switch (global.kind()) {
    case Format::plain:
      out << "lambda: " << join(lambdas, ", ") << '\n';
      out << "sequence: " << join(sequence, ", ") << '\n';
      if (!global.quiet) out << "recurrence: " << (holds ? "ok" : "FAILED") << '\n';
      break;
    case Format::csv:
      out << "field,index,value\n";
      for (std::size_t i = 0; i < lambdas.size(); ++i) out << "lambda," << i << ',' << lambdas[i] << '\n';
      for (std::size_t i = 0; i < sequence.size(); ++i) out << "sequence," << i << ',' << sequence[i] << '\n';
      out << "recurrence,," << (holds ? "ok" : "failed") << '\n';
      break;
    case Format::json:
      out << json{{"kind", "decomposition"},
                  {"ring", ring_traits<R>::name},
                  {"coefficients", render_all(rec.coefficients())},
                  {"initial", render_all(rec.initial())},
                  {"lambdas", lambdas},
                  {"sequence", sequence},
                  {"recurrence_holds", holds}}
                 .dump()
          << '\n';
      break;
  }
  return holds ? kExitOk : kExitMismatch;
}

// bell

struct BellOptions {
  int n = 0;
  int k = 0;
  bool symbolic = false;
  std::optional<std::string> x;
  bool cross_check = false;
};

int emit_symbolic(const BellOptions& opts, const GlobalOptions& global, std::ostream& out) {
  const SymbolicBellPolynomial poly = bell_symbolic(opts.n, opts.k);
  switch (global.kind()) {
    case Format::plain:
      out << poly.to_string() << '\n';
      break;
    case Format::csv:
      out << "n,k,symbolic\n" << opts.n << ',' << opts.k << ',' << poly.to_string() << '\n';
      break;
    case Format::json: {
      json terms = json::array();
      for (const auto& term : poly.terms()) {
        terms.push_back({{"coefficient", term.coefficient.str()}, {"exponents", term.index.exponents()}});
      }
      out << json{{"kind", "bellpoly"},
                  {"n", opts.n},
                  {"k", opts.k},
                  {"symbolic", poly.to_string()},
                  {"terms", terms}}
                 .dump()
          << '\n';
      break;
    }
  }
  return kExitOk;
}

template <RingElement R>
int emit_bell_value(const std::vector<std::string>& items, const BellOptions& opts, const GlobalOptions& global,
                    std::ostream& out) {
  const std::vector<R> xs = parse_elements<R>(items);
  const R value = bell_eval(opts.n, opts.k, xs);
  std::optional<bool> agreed;
  if (opts.cross_check) agreed = value == bell_eval_recurrence(opts.n, opts.k, xs);
  const char* verdict = agreed && !*agreed ? "mismatch" : "ok";
  switch (global.kind()) {
    case Format::plain:
      out << value.to_string();
      if (agreed) out << " (cross-check: " << verdict << ')';
      out << '\n';
      break;
    case Format::csv:
      out << (agreed ? "n,k,value,cross_check\n" : "n,k,value\n");
      out << opts.n << ',' << opts.k << ',' << value.to_string();
      if (agreed) out << ',' << verdict;
      out << '\n';
      break;
    case Format::json: {
      json record{{"kind", "bellpoly"},
                  {"ring", ring_traits<R>::name},
                  {"n", opts.n},
                  {"k", opts.k},
                  {"value", value.to_string()}};
      if (agreed) record["cross_check"] = verdict;
      out << record.dump() << '\n';
      break;
    }
  }
  return agreed && !*agreed ? kExitMismatch : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact partial Bell polynomials, Bell-transform sequences and their convolutions", "bellseq"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_flag("--quiet", global.quiet, "Suppress summary lines");

  SeqOptions seq_opts;
  auto* seq = app.add_subcommand("seq", "Print y_0 ... y_N");
  seq_opts.spec.attach(*seq);
  seq->add_option("--n", seq_opts.n, "Last index N")->required()->check(CLI::NonNegativeNumber);
  seq->add_flag("--apply-offset", seq_opts.apply_offset, "Print the classical sequence of the preset instead of y");

  ConvOptions conv_opts;
  auto* conv = app.add_subcommand("conv", "r-fold convolution: closed form against the composition sum");
  conv_opts.spec.attach(*conv);
  conv->add_option("--r", conv_opts.r, "Number of factors r")->required()->check(CLI::PositiveNumber);
  conv->add_option("--n", conv_opts.n, "Check n = 1 ... N")->required()->check(CLI::PositiveNumber);
  conv->add_option("--delta", conv_opts.delta, "Index shift (a=0, b=1 family only)")->check(CLI::NonNegativeNumber);
  conv->add_flag("--check,!--no-check", conv_opts.check, "Compare against the composition sum (default on)");
  conv->add_flag("--closed-only", conv_opts.closed_only, "Only print the closed form");

  DecomposeOptions dec_opts;
  auto* dec = app.add_subcommand("decompose", "Write a linear recurrence sequence over shifted Bell sequences");
  dec->add_option("--coeffs", dec_opts.coeffs, "Recurrence coefficients c_1,...,c_d")->required();
  dec->add_option("--init", dec_opts.init, "Initial values a_0,...,a_{d-1}")->required();
  dec->add_option("--n", dec_opts.n, "Last index N")->required()->check(CLI::NonNegativeNumber);

  BellOptions bell_opts;
  auto* bell = app.add_subcommand("bell", "Partial Bell polynomial B_{n,k}");
  bell->add_option("--n", bell_opts.n, "n")->required()->check(CLI::NonNegativeNumber);
  bell->add_option("--k", bell_opts.k, "k")->required()->check(CLI::NonNegativeNumber);
  auto* symbolic = bell->add_flag("--symbolic", bell_opts.symbolic, "Print the polynomial");
  auto* xs = bell->add_option("--x", bell_opts.x, "Evaluate at x_1,x_2,...");
  symbolic->excludes(xs);
  bell->add_flag("--cross-check", bell_opts.cross_check, "Also evaluate through the triangle recurrence");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (seq->parsed()) {
      return std::visit([&](const auto& source) { return emit_sequence(source, seq_opts, global, out); },
                        resolve(seq_opts.spec));
    }
    if (conv->parsed()) {
      return std::visit([&](const auto& source) { return emit_convolution(source, conv_opts, global, out); },
                        resolve(conv_opts.spec));
    }
    if (dec->parsed()) {
      const auto coeffs = split_list(dec_opts.coeffs);
      const auto init = split_list(dec_opts.init);
      if (mentions_indeterminate(coeffs) || mentions_indeterminate(init)) {
        return emit_decomposition<Polynomial>(coeffs, init, dec_opts, global, out);
      }
      return emit_decomposition<Rational>(coeffs, init, dec_opts, global, out);
    }
    if (bell->parsed()) {
      if (bell_opts.symbolic == bell_opts.x.has_value()) throw UsageError("bell needs exactly one of --symbolic, --x");
      if (bell_opts.symbolic) return emit_symbolic(bell_opts, global, out);
      const auto items = split_list(*bell_opts.x);
      if (mentions_indeterminate(items)) return emit_bell_value<Polynomial>(items, bell_opts, global, out);
      return emit_bell_value<Rational>(items, bell_opts, global, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bellseq::cli
