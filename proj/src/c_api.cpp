#include "mono/mono.h"

#include <charconv>
#include <new>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mono/colourings.hpp"
#include "mono/constructor.hpp"
#include "mono/digits.hpp"
#include "mono/engine.hpp"
#include "mono/json.hpp"
#include "mono/primes.hpp"
#include "mono/properties.hpp"

struct mc_document {
  mono::Json body;
  std::string compact;
  std::string pretty;
};

namespace {

thread_local std::string last_error;

mc_status status_of(mono::ErrorKind kind) {
  switch (kind) {
    case mono::ErrorKind::Domain: return MC_DOMAIN;
    case mono::ErrorKind::Overflow: return MC_OVERFLOW;
    case mono::ErrorKind::UnsupportedPrime: return MC_UNSUPPORTED_PRIME;
    case mono::ErrorKind::OutOfRange: return MC_OUT_OF_RANGE;
    case mono::ErrorKind::Parse: return MC_PARSE;
    case mono::ErrorKind::BudgetExhausted: return MC_BUDGET_EXHAUSTED;
    case mono::ErrorKind::InternalInvariant: return MC_INTERNAL;
  }
  return MC_INTERNAL;
}

mc_status invalid(const std::string& what) {
  last_error = what;
  return MC_INVALID_ARGUMENT;
}

// Runs body, translating exceptions into status codes.
template <class F>
mc_status guarded(mc_document** out, F&& body) {
  if (out == nullptr) return invalid("output pointer is null");
  *out = nullptr;
  last_error.clear();
  try {
    mc_status status = MC_OK;
    mono::Json doc = body(status);
    *out = new mc_document{std::move(doc), {}, {}};
    return status;
  } catch (const mono::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const mono::Json::exception& e) {
    last_error = e.what();
    return MC_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MC_NO_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MC_INTERNAL;
  }
}

std::string required(const char* s, const char* name) {
  if (s == nullptr) mono::fail(mono::ErrorKind::Domain, std::string(name) + " is missing");
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    mono::fail(mono::ErrorKind::Parse, "invalid integer pair '" + std::string(whole) + "'");
  }
  return v;
}

mpz_class parse_bound(const char* s, const char* name) {
  const std::string text = required(s, name);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    mono::fail(mono::ErrorKind::Parse, std::string(name) + " must be a decimal natural");
  }
  return mpz_class(text);
}

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

extern "C" {

void mc_search_options_init(mc_search_options* o) {
  if (o == nullptr) return;
  o->colouring = "const";
  o->mode = "pairwise";
  o->target = 2;
  o->budget = 1'000'000;
  o->workers = 0;
  o->prime_index_bound = 1;
  o->numerator_bound = "16";
  o->denominator_bound = "1";
  o->integers_only = 0;
}

void mc_construct_options_init(mc_construct_options* o) {
  if (o == nullptr) return;
  const mono::ConstructOptions defaults;
  o->terms = 2;
  o->budget = defaults.budget;
  o->workers = 0;
  o->pool = defaults.pool;
  o->products_only = 0;
}

mc_status mc_colour(const char* colouring, const char* input, mc_document** out) {
  return guarded(out, [&](mc_status&) {
    const mono::ColouringId id = mono::parse_colouring(required(colouring, "colouring"));
    const std::string text = required(input, "input");
    if (mono::is_pair_colouring(id)) {
      const auto comma = text.find(',');
      if (comma == std::string::npos) {
        mono::fail(mono::ErrorKind::Parse, "pair colourings take 'a,b', got '" + text + "'");
      }
      const std::string_view view(text);
      const std::int64_t a = parse_int(view.substr(0, comma), view);
      const std::int64_t b = parse_int(view.substr(comma + 1), view);
      return mono::colour_document(text, mono::colour_of_pair(id, a, b));
    }
    return mono::colour_document(text, mono::colour_of(id, mono::Rational::parse(text)));
  });
}

mc_status mc_expand(const char* input, size_t base_index, mc_document** out) {
  return guarded(out, [&](mc_status&) {
    const std::string text = required(input, "input");
    const mono::Rational x = mono::Rational::parse(text);
    const std::size_t n = base_index == 0 ? mono::minimal_base_index(x) : base_index;
    return mono::expansion_document(text, mono::expand(x, n));
  });
}

mc_status mc_check(const char* colouring, const char* mode, const char* const* terms, size_t count,
                   mc_document** out) {
  return guarded(out, [&](mc_status&) {
    const mono::ColouringId id = mono::parse_colouring(required(colouring, "colouring"));
    const mono::CombinationMode m = mono::parse_mode(required(mode, "mode"));
    if (terms == nullptr && count > 0) mono::fail(mono::ErrorKind::Domain, "terms are missing");
    std::vector<mono::Rational> xs;
    for (size_t i = 0; i < count; ++i) xs.push_back(mono::Rational::parse(required(terms[i], "term")));
    if (xs.empty()) mono::fail(mono::ErrorKind::Domain, "the sequence is empty");
    return mono::to_json(mono::check(id, xs, m));
  });
}

mc_status mc_search(const mc_search_options* options, mc_document** out) {
  return guarded(out, [&](mc_status& status) {
    if (options == nullptr) mono::fail(mono::ErrorKind::Domain, "search options are missing");
    mono::SearchOptions opt;
    opt.colouring = mono::parse_colouring(required(options->colouring, "colouring"));
    opt.mode = mono::parse_mode(required(options->mode, "mode"));
    opt.target = options->target;
    opt.budget = options->budget;
    opt.workers = resolve_workers(options->workers);
    mono::UniverseSpec universe;
    universe.prime_index_bound = options->prime_index_bound;
    universe.numerator_bound = parse_bound(options->numerator_bound, "numerator bound");
    universe.denominator_bound = parse_bound(options->denominator_bound, "denominator bound");
    universe.integers_only = options->integers_only != 0;
    const auto elements = mono::enumerate_universe(universe);
    const mono::SearchResult r = mono::search(elements, opt);
    if (!r.exhaustive) {
      status = MC_BUDGET_EXHAUSTED;
      last_error = "search budget of " + std::to_string(opt.budget) + " nodes exhausted";
    }
    return mono::search_document(universe, elements.size(), opt, r);
  });
}

mc_status mc_construct(const mc_construct_options* options, mc_document** out) {
  return guarded(out, [&](mc_status& status) {
    if (options == nullptr) mono::fail(mono::ErrorKind::Domain, "construct options are missing");
    mono::ConstructOptions opt;
    opt.budget = options->budget;
    opt.workers = resolve_workers(options->workers);
    opt.pool = options->pool;
    const bool sums = options->products_only == 0;
    const mono::ConstructResult r = sums ? mono::extend_sum_closed(options->terms, opt)
                                         : mono::find_product_subsystem(options->terms, opt);
    if (!r.found) {
      status = MC_BUDGET_EXHAUSTED;
      last_error = "no construction within the budget; reached depth " + std::to_string(r.best_depth);
    }
    return mono::construct_document(options->terms, sums, opt, r);
  });
}

mc_status mc_properties(uint64_t seed, uint64_t samples, mc_document** out) {
  return guarded(out, [&](mc_status&) {
    return mono::properties_document(mono::property_suite(seed, samples));
  });
}

mc_status mc_validate(const char* certificate_json, mc_document** out) {
  return guarded(out, [&](mc_status&) {
    const mono::Json j = mono::Json::parse(required(certificate_json, "certificate"));
    mono::Validation v;
    try {
      v = mono::validate(mono::certificate_from_json(j));
    } catch (const mono::Error& e) {
      if (e.kind() == mono::ErrorKind::Parse) throw;
      v = {false, e.what()};
    }
    return mono::validation_document(v);
  });
}

const char* mc_document_json(mc_document* doc, int pretty) {
  if (doc == nullptr) return nullptr;
  try {
    std::string& cache = pretty ? doc->pretty : doc->compact;
    if (cache.empty()) cache = pretty ? doc->body.dump(2) : doc->body.dump();
    return cache.c_str();
  } catch (const std::exception& e) {
    last_error = e.what();
    return nullptr;
  }
}

void mc_document_free(mc_document* doc) { delete doc; }

const char* mc_last_error(void) { return last_error.c_str(); }

const char* mc_status_string(mc_status status) {
  switch (status) {
    case MC_OK: return "ok";
    case MC_DOMAIN: return "domain error";
    case MC_OVERFLOW: return "overflow";
    case MC_UNSUPPORTED_PRIME: return "unsupported prime";
    case MC_OUT_OF_RANGE: return "out of range";
    case MC_PARSE: return "parse error";
    case MC_BUDGET_EXHAUSTED: return "budget exhausted";
    case MC_INTERNAL: return "internal invariant violated";
    case MC_INVALID_ARGUMENT: return "invalid argument";
    case MC_NO_MEMORY: return "out of memory";
  }
  return "unknown status";
}

}  // extern "C"
