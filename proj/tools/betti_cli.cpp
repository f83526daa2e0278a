// Command-line front end for the betti shared library. Talks to the library
// exclusively through the C API in betti/betti.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betti/betti.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { betti_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct DiagramDeleter {
  void operator()(betti_diagram* d) const { betti_diagram_free(d); }
};
using OwnedDiagram = std::unique_ptr<betti_diagram, DiagramDeleter>;

struct DecompositionDeleter {
  void operator()(betti_decomposition* d) const { betti_decomposition_free(d); }
};
using OwnedDecomposition =
    std::unique_ptr<betti_decomposition, DecompositionDeleter>;

struct ReportDeleter {
  void operator()(betti_report* r) const { betti_report_free(r); }
};
using OwnedReport = std::unique_ptr<betti_report, ReportDeleter>;

int exit_code_for(betti_status status) {
  switch (status) {
    case BETTI_OK:
      return kExitOk;
    case BETTI_ERROR_INVALID_ARGUMENT:
    case BETTI_ERROR_PARSE:
      return kExitUsage;
    default:
      return kExitVerificationFailure;
  }
}

int fail(betti_status status) {
  std::cerr << "error: " << betti_last_error() << "\n";
  return exit_code_for(status);
}

bool parse_format(const std::string& name, betti_format* out) {
  if (name == "json") {
    *out = BETTI_FORMAT_JSON;
  } else if (name == "csv") {
    *out = BETTI_FORMAT_CSV;
  } else if (name == "table") {
    *out = BETTI_FORMAT_TABLE;
  } else {
    return false;
  }
  return true;
}

int print_diagram(const betti_diagram* diagram, const std::string& format) {
  betti_format fmt = BETTI_FORMAT_TABLE;
  if (!parse_format(format, &fmt)) {
    std::cerr << "error: unknown format '" << format << "'\n";
    return kExitUsage;
  }
  char* text = nullptr;
  if (betti_status status = betti_diagram_render(diagram, fmt, &text)) {
    return fail(status);
  }
  OwnedString owned(text);
  std::cout << owned.get();
  return kExitOk;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *out = buffer.str();
  return true;
}

// "auto" sniffs JSON by the leading '{'.
bool resolve_input_format(const std::string& name, const std::string& text,
                          betti_format* out) {
  if (name == "auto") {
    const auto first = text.find_first_not_of(" \t\r\n");
    *out = (first != std::string::npos && text[first] == '{')
               ? BETTI_FORMAT_JSON
               : BETTI_FORMAT_CSV;
    return true;
  }
  return parse_format(name, out) && *out != BETTI_FORMAT_TABLE;
}

int load_diagram(const std::string& path, const std::string& format,
                 OwnedDiagram* out) {
  std::string text;
  if (!read_file(path, &text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  betti_format fmt = BETTI_FORMAT_CSV;
  if (!resolve_input_format(format, text, &fmt)) {
    std::cerr << "error: input format must be auto, json or csv\n";
    return kExitUsage;
  }
  betti_diagram* diagram = nullptr;
  if (betti_status status = betti_diagram_parse(text.c_str(), fmt, &diagram)) {
    return fail(status);
  }
  out->reset(diagram);
  return kExitOk;
}

std::vector<std::int64_t> parse_sequence(const std::string& text) {
  std::vector<std::int64_t> values;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    values.push_back(std::stoll(token, &used));
    if (used != token.size()) throw std::invalid_argument(token);
  }
  if (values.empty()) throw std::invalid_argument("empty sequence");
  return values;
}

int run_pure(const std::string& sequence, const std::string& format) {
  std::vector<std::int64_t> entries;
  try {
    entries = parse_sequence(sequence);
  } catch (const std::exception&) {
    std::cerr << "error: --sequence expects comma-separated integers, got '"
              << sequence << "'\n";
    return kExitUsage;
  }
  betti_diagram* diagram = nullptr;
  if (betti_status status =
          betti_pure_diagram(entries.data(), entries.size(), &diagram)) {
    return fail(status);
  }
  OwnedDiagram owned(diagram);
  return print_diagram(owned.get(), format);
}

int run_secant(std::int64_t k, std::int64_t r, bool have_r, std::int64_t degree,
               bool have_degree, const std::string& format) {
  if (have_r == have_degree) {
    std::cerr << "error: give exactly one of --r or --degree\n";
    return kExitUsage;
  }
  if (have_degree) r = degree - 2;
  betti_diagram* diagram = nullptr;
  if (betti_status status = betti_secant_diagram(k, r, &diagram)) {
    return fail(status);
  }
  OwnedDiagram owned(diagram);
  return print_diagram(owned.get(), format);
}

int run_decompose(const std::string& path, const std::string& format) {
  OwnedDiagram diagram;
  if (int code = load_diagram(path, format, &diagram)) return code;
  betti_decomposition* decomposition = nullptr;
  if (betti_status status =
          betti_diagram_decompose(diagram.get(), &decomposition)) {
    return fail(status);
  }
  OwnedDecomposition owned(decomposition);

  const size_t count = betti_decomposition_term_count(owned.get());
  for (size_t index = 0; index < count; ++index) {
    char* coefficient = nullptr;
    char* normalized = nullptr;
    char* sequence = nullptr;
    betti_decomposition_coefficient(owned.get(), index, &coefficient);
    betti_decomposition_normalized_coefficient(owned.get(), index, &normalized);
    betti_decomposition_sequence(owned.get(), index, &sequence);
    OwnedString c(coefficient), n(normalized), s(sequence);
    std::cout << "coefficient " << c.get() << "  normalized " << n.get()
              << "  sequence " << s.get() << "\n";
  }
  char* total = nullptr;
  betti_decomposition_total(owned.get(), &total);
  OwnedString t(total);
  std::cout << "total " << t.get() << "\n";
  return kExitOk;
}

int run_multiplicity(const std::string& path, const std::string& format) {
  OwnedDiagram diagram;
  if (int code = load_diagram(path, format, &diagram)) return code;
  char* value = nullptr;
  if (betti_status status =
          betti_diagram_multiplicity(diagram.get(), &value)) {
    return fail(status);
  }
  OwnedString owned(value);
  std::cout << owned.get() << "\n";
  return kExitOk;
}

int run_hochster(std::int64_t nvars, const std::string& ideal,
                 const std::string& format) {
  betti_diagram* diagram = nullptr;
  if (betti_status status =
          betti_hochster_diagram(nvars, ideal.c_str(), &diagram)) {
    return fail(status);
  }
  OwnedDiagram owned(diagram);
  return print_diagram(owned.get(), format);
}

int run_verify(std::int64_t k_max, std::int64_t r_extra, bool verbose) {
  if (k_max < 0 || r_extra < 0) {
    std::cerr << "error: --k-max and --r-extra must be nonnegative\n";
    return kExitUsage;
  }
  bool all_passed = true;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    for (std::int64_t r = 2 * k + 3; r <= 2 * k + 3 + r_extra; ++r) {
      betti_report* report = nullptr;
      if (betti_status status = betti_verify(k, r, &report)) {
        return fail(status);
      }
      OwnedReport owned(report);
      const bool passed = betti_report_passed(owned.get()) == 1;
      all_passed = all_passed && passed;
      if (verbose || !passed) {
        char* text = nullptr;
        betti_report_render(owned.get(), &text);
        OwnedString rendered(text);
        std::cout << rendered.get();
      } else {
        std::cout << "k=" << k << " r=" << r << ": PASS ("
                  << betti_report_check_count(owned.get()) << " checks)\n";
      }
    }
  }
  std::cout << (all_passed ? "verification passed" : "verification FAILED")
            << "\n";
  return all_passed ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Betti diagram toolkit: pure diagrams, Boij-Soderberg "
               "decomposition, Hilbert multiplicity, secant variety diagrams "
               "of genus-2 curves, and a monomial-ideal homology oracle"};
  app.require_subcommand(1);

  std::string sequence, format = "table", input_format = "auto";
  std::string input_path, ideal;
  std::int64_t k = 0, r = 0, degree = 0, nvars = 0;
  std::int64_t k_max = 6, r_extra = 12;
  bool verbose = false;

  auto* pure = app.add_subcommand("pure", "Pure diagram of a degree sequence");
  pure->add_option("--sequence", sequence,
                   "strictly increasing integers, e.g. 0,3,4,7,8")
      ->required();
  pure->add_option("--format", format, "table, json or csv");

  auto* secant = app.add_subcommand(
      "secant", "Betti diagram of the k-th secant variety (genus 2)");
  secant->add_option("--k", k, "secant order k >= 0")->required();
  auto* r_opt = secant->add_option("--r", r, "ambient projective dimension");
  auto* degree_opt =
      secant->add_option("--degree", degree, "line bundle degree (r+2)");
  secant->add_option("--format", format, "table, json or csv");

  auto* decompose = app.add_subcommand(
      "decompose", "Greedy pure-diagram decomposition of a diagram file");
  decompose->add_option("--input", input_path, "diagram file (json or csv)")
      ->required();
  decompose->add_option("--format", input_format, "auto, json or csv");

  auto* multiplicity = app.add_subcommand(
      "multiplicity", "Multiplicity of a diagram file");
  multiplicity->add_option("--input", input_path, "diagram file (json or csv)")
      ->required();
  multiplicity->add_option("--format", input_format, "auto, json or csv");

  auto* hochster = app.add_subcommand(
      "hochster", "Betti diagram of a squarefree monomial ideal");
  hochster->add_option("--vars", nvars, "number of variables")->required();
  hochster
      ->add_option("--ideal", ideal,
                   "generators, e.g. \"x0*x2, x1*x3\" or \"1010,0101\"")
      ->required();
  hochster->add_option("--format", format, "table, json or csv");

  auto* verify = app.add_subcommand(
      "verify", "Exact verification sweep over the (k, r) grid");
  verify->add_option("--k-max", k_max, "largest secant order (default 6)");
  verify->add_option("--r-extra", r_extra,
                     "r runs from 2k+3 to 2k+3 + r-extra (default 12)");
  verify->add_flag("--verbose", verbose, "print every check line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (pure->parsed()) return run_pure(sequence, format);
  if (secant->parsed()) {
    return run_secant(k, r, r_opt->count() > 0, degree,
                      degree_opt->count() > 0, format);
  }
  if (decompose->parsed()) return run_decompose(input_path, input_format);
  if (multiplicity->parsed()) return run_multiplicity(input_path, input_format);
  if (hochster->parsed()) return run_hochster(nvars, ideal, format);
  if (verify->parsed()) return run_verify(k_max, r_extra, verbose);
  return kExitUsage;
}
