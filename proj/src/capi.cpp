#include "betti/betti.h"

#include <cstring>
#include <string>
#include <vector>

#include "decompose.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "hilbert.hpp"
#include "monomial.hpp"
#include "rational.hpp"
#include "secant.hpp"
#include "serialize.hpp"

struct betti_diagram {
  betti::BettiDiagram value;
};

struct betti_decomposition {
  betti::Decomposition value;
};

struct betti_report {
  betti::VerificationReport value;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& message) {
  g_last_error = message;
}

char* duplicate(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into status codes and the thread-local
// error message.
template <typename Fn>
betti_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const betti::ParseError& e) {
    set_error(e.what());
    return BETTI_ERROR_PARSE;
  } catch (const betti::NotDivisibleError& e) {
    set_error(e.what());
    return BETTI_ERROR_NOT_DIVISIBLE;
  } catch (const betti::NotInConeError& e) {
    set_error(std::string(e.what()) + "\nresidual:\n" + e.residual());
    return BETTI_ERROR_NOT_IN_CONE;
  } catch (const betti::OverlapError& e) {
    set_error(e.what());
    return BETTI_ERROR_OVERLAP;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return BETTI_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return BETTI_ERROR_INTERNAL;
  }
}

betti_status require(bool condition, const char* message) {
  if (!condition) {
    set_error(message);
    return BETTI_ERROR_INVALID_ARGUMENT;
  }
  return BETTI_OK;
}

betti::DiagramFormat to_format(betti_format fmt) {
  switch (fmt) {
    case BETTI_FORMAT_JSON:
      return betti::DiagramFormat::kJson;
    case BETTI_FORMAT_CSV:
      return betti::DiagramFormat::kCsv;
    case BETTI_FORMAT_TABLE:
      return betti::DiagramFormat::kTable;
  }
  throw std::invalid_argument("unknown format code");
}

}  // namespace

extern "C" {

const char* betti_version(void) { return "1.0.0"; }

const char* betti_last_error(void) { return g_last_error.c_str(); }

void betti_string_free(char* text) { delete[] text; }

betti_status betti_pure_diagram(const int64_t* entries, size_t count,
                                betti_diagram** out) {
  if (auto status = require(entries && out, "null argument")) return status;
  return guarded([&] {
    betti::DegreeSequence sequence(
        std::vector<std::int64_t>(entries, entries + count));
    *out = new betti_diagram{betti::pure_diagram(sequence)};
    return BETTI_OK;
  });
}

betti_status betti_secant_diagram(int64_t k, int64_t r, betti_diagram** out) {
  if (auto status = require(out != nullptr, "null output pointer")) {
    return status;
  }
  return guarded([&] {
    *out = new betti_diagram{betti::assemble_betti(betti::SecantParams(k, r))};
    return BETTI_OK;
  });
}

betti_status betti_hochster_diagram(int64_t nvars, const char* ideal,
                                    betti_diagram** out) {
  if (auto status = require(ideal && out, "null argument")) return status;
  return guarded([&] {
    *out = new betti_diagram{
        betti::hochster_betti(betti::SquarefreeIdeal::parse(nvars, ideal))};
    return BETTI_OK;
  });
}

betti_status betti_diagram_parse(const char* text, betti_format fmt,
                                 betti_diagram** out) {
  if (auto status = require(text && out, "null argument")) return status;
  return guarded([&] {
    *out = new betti_diagram{betti::parse_diagram(text, to_format(fmt))};
    return BETTI_OK;
  });
}

betti_status betti_diagram_render(const betti_diagram* diagram,
                                  betti_format fmt, char** out) {
  if (auto status = require(diagram && out, "null argument")) return status;
  return guarded([&] {
    *out = duplicate(betti::render_diagram(diagram->value, to_format(fmt)));
    return BETTI_OK;
  });
}

betti_status betti_diagram_entry(const betti_diagram* diagram, int64_t p,
                                 int64_t q, char** out) {
  if (auto status = require(diagram && out, "null argument")) return status;
  return guarded([&] {
    *out = duplicate(betti::to_string(diagram->value.entry(p, q)));
    return BETTI_OK;
  });
}

betti_status betti_diagram_multiplicity(const betti_diagram* diagram,
                                        char** out) {
  if (auto status = require(diagram && out, "null argument")) return status;
  return guarded([&] {
    *out = duplicate(betti::to_string(betti::multiplicity(diagram->value)));
    return BETTI_OK;
  });
}

void betti_diagram_free(betti_diagram* diagram) { delete diagram; }

betti_status betti_diagram_decompose(const betti_diagram* diagram,
                                     betti_decomposition** out) {
  if (auto status = require(diagram && out, "null argument")) return status;
  return guarded([&] {
    *out = new betti_decomposition{betti::greedy_decompose(diagram->value)};
    return BETTI_OK;
  });
}

size_t betti_decomposition_term_count(
    const betti_decomposition* decomposition) {
  return decomposition ? decomposition->value.size() : 0;
}

betti_status betti_decomposition_coefficient(
    const betti_decomposition* decomposition, size_t index, char** out) {
  if (auto status = require(decomposition && out, "null argument")) {
    return status;
  }
  if (auto status = require(index < decomposition->value.size(),
                            "term index out of range")) {
    return status;
  }
  *out = duplicate(betti::to_string(decomposition->value[index].coefficient));
  return BETTI_OK;
}

betti_status betti_decomposition_normalized_coefficient(
    const betti_decomposition* decomposition, size_t index, char** out) {
  if (auto status = require(decomposition && out, "null argument")) {
    return status;
  }
  if (auto status = require(index < decomposition->value.size(),
                            "term index out of range")) {
    return status;
  }
  return guarded([&] {
    const betti::Rational total = decomposition->value.total();
    if (total == 0) {
      throw std::invalid_argument("empty decomposition has no normalization");
    }
    *out = duplicate(
        betti::to_string(decomposition->value[index].coefficient / total));
    return BETTI_OK;
  });
}

betti_status betti_decomposition_sequence(
    const betti_decomposition* decomposition, size_t index, char** out) {
  if (auto status = require(decomposition && out, "null argument")) {
    return status;
  }
  if (auto status = require(index < decomposition->value.size(),
                            "term index out of range")) {
    return status;
  }
  *out = duplicate(decomposition->value[index].sequence.to_string());
  return BETTI_OK;
}

betti_status betti_decomposition_total(
    const betti_decomposition* decomposition, char** out) {
  if (auto status = require(decomposition && out, "null argument")) {
    return status;
  }
  *out = duplicate(betti::to_string(decomposition->value.total()));
  return BETTI_OK;
}

void betti_decomposition_free(betti_decomposition* decomposition) {
  delete decomposition;
}

betti_status betti_verify(int64_t k, int64_t r, betti_report** out) {
  if (auto status = require(out != nullptr, "null output pointer")) {
    return status;
  }
  return guarded([&] {
    *out = new betti_report{betti::verify(betti::SecantParams(k, r))};
    return BETTI_OK;
  });
}

int betti_report_passed(const betti_report* report) {
  return report && report->value.all_passed() ? 1 : 0;
}

size_t betti_report_check_count(const betti_report* report) {
  return report ? report->value.checks().size() : 0;
}

betti_status betti_report_render(const betti_report* report, char** out) {
  if (auto status = require(report && out, "null argument")) return status;
  *out = duplicate(report->value.to_string());
  return BETTI_OK;
}

void betti_report_free(betti_report* report) { delete report; }

}  // extern "C"
