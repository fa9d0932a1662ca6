#include "morpho/morpho_c.h"

#include <cstdlib>
#include <cstring>

#include "io.hpp"

using morpho::Errc;

struct morpho_lattice {
  std::shared_ptr<const morpho::Lattice> lat;
};
struct morpho_sub {
  morpho::Sub sub;
};
struct morpho_se {
  morpho::StructuringElement se;
};
struct morpho_model {
  morpho::Model model;
};

namespace {

thread_local std::string t_error;
thread_local int t_status = MORPHO_OK;

void clear_error() {
  t_error.clear();
  t_status = MORPHO_OK;
}

void record_error(const std::exception& e, int status) {
  t_error = e.what();
  t_status = status;
}

template <class Fn>
auto wrap(Fn&& fn) -> decltype(fn()) {
  clear_error();
  try {
    return fn();
  } catch (const morpho::Error& e) {
    record_error(e, static_cast<int>(e.code));
  } catch (const std::exception& e) {
    record_error(e, MORPHO_E_BAD_INPUT);
  }
  return {};
}

template <class Fn>
int wrap_status(Fn&& fn) {
  clear_error();
  try {
    fn();
    return MORPHO_OK;
  } catch (const morpho::Error& e) {
    record_error(e, static_cast<int>(e.code));
  } catch (const std::exception& e) {
    record_error(e, MORPHO_E_BAD_INPUT);
  }
  return t_status;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) return nullptr;
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

morpho::json parse_json(const char* text, const char* what) {
  if (!text) morpho::fail(Errc::BadInput, std::string(what) + " is null");
  morpho::json j = morpho::json::parse(text, nullptr, false);
  if (j.is_discarded()) morpho::fail(Errc::BadInput, std::string(what) + " is not valid JSON");
  return j;
}

void need(const void* p, const char* what) {
  if (!p) morpho::fail(Errc::BadInput, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* morpho_last_error(void) { return t_error.c_str(); }
int morpho_last_status(void) { return t_status; }
const char* morpho_status_name(int status) {
  return morpho::errc_name(static_cast<Errc>(status));
}
void morpho_string_free(char* s) { std::free(s); }

morpho_lattice* morpho_lattice_create(const char* ground_json, const char* forget_mode) {
  return wrap([&]() -> morpho_lattice* {
    need(forget_mode, "forget mode");
    morpho::Ground g = morpho::ground_from_json(parse_json(ground_json, "ground"));
    auto lat = std::make_shared<morpho::Lattice>(std::move(g),
                                                 morpho::mode_from_name(forget_mode));
    return new morpho_lattice{std::move(lat)};
  });
}

void morpho_lattice_free(morpho_lattice* lat) { delete lat; }

morpho_sub* morpho_sub_parse(const morpho_lattice* lat, const char* sub_json) {
  return wrap([&]() -> morpho_sub* {
    need(lat, "lattice");
    return new morpho_sub{morpho::sub_from_json(*lat->lat, parse_json(sub_json, "subobject"))};
  });
}

char* morpho_sub_dump(const morpho_lattice* lat, const morpho_sub* d) {
  return wrap([&]() -> char* {
    need(lat, "lattice");
    need(d, "subobject");
    return dup_string(morpho::dump_json(morpho::sub_to_json(*lat->lat, d->sub)));
  });
}

morpho_sub* morpho_sub_top(const morpho_lattice* lat) {
  return wrap([&]() -> morpho_sub* {
    need(lat, "lattice");
    return new morpho_sub{lat->lat->top()};
  });
}

morpho_sub* morpho_sub_bottom(const morpho_lattice* lat) {
  return wrap([&]() -> morpho_sub* {
    need(lat, "lattice");
    return new morpho_sub{lat->lat->bottom()};
  });
}

int morpho_sub_equal(const morpho_lattice* lat, const morpho_sub* a, const morpho_sub* b,
                     int* out_equal) {
  return wrap_status([&] {
    need(lat, "lattice");
    need(a, "subobject");
    need(b, "subobject");
    need(out_equal, "output");
    lat->lat->check_same_ground(a->sub);
    lat->lat->check_same_ground(b->sub);
    *out_equal = a->sub == b->sub ? 1 : 0;
  });
}

int morpho_sub_leq(const morpho_lattice* lat, const morpho_sub* a, const morpho_sub* b,
                   int* out_leq) {
  return wrap_status([&] {
    need(lat, "lattice");
    need(a, "subobject");
    need(b, "subobject");
    need(out_leq, "output");
    *out_leq = lat->lat->leq(a->sub, b->sub) ? 1 : 0;
  });
}

void morpho_sub_free(morpho_sub* d) { delete d; }

morpho_se* morpho_se_parse(const morpho_lattice* lat, const char* se_json) {
  return wrap([&]() -> morpho_se* {
    need(lat, "lattice");
    return new morpho_se{
        morpho::se_from_json(*lat->lat, parse_json(se_json, "structuring element"))};
  });
}

char* morpho_se_dump(const morpho_lattice* lat, const morpho_se* b) {
  return wrap([&]() -> char* {
    need(lat, "lattice");
    need(b, "structuring element");
    return dup_string(morpho::dump_json(morpho::se_to_json(*lat->lat, b->se)));
  });
}

int morpho_se_is_covered(const morpho_lattice* lat, const morpho_se* b, int* out_covered) {
  return wrap_status([&] {
    need(lat, "lattice");
    need(b, "structuring element");
    need(out_covered, "output");
    *out_covered = morpho::is_covered(*lat->lat, b->se) ? 1 : 0;
  });
}

void morpho_se_free(morpho_se* b) { delete b; }

morpho_sub* morpho_apply(const morpho_lattice* lat, const morpho_se* b, const morpho_sub* d,
                         const char* op_c, const char* method_c) {
  return wrap([&]() -> morpho_sub* {
    need(lat, "lattice");
    need(b, "structuring element");
    need(d, "subobject");
    need(op_c, "op");
    need(method_c, "method");
    const morpho::Lattice& L = *lat->lat;
    std::string op = op_c, method = method_c;

    auto erode = [&](const morpho::Sub& x) {
      if (method == "generic") return morpho::erode_generic(L, b->se, x);
      if (method == "fast") return morpho::erode_closed_form(L, b->se, x);
      if (method == "paper-algorithm") return morpho::erode_paper_algorithm(L, b->se, x);
      morpho::fail(Errc::BadInput, "unknown method '" + method + "'");
    };
    auto dilate = [&](const morpho::Sub& x) {
      if (method == "generic") return morpho::dilate(L, b->se, x);
      if (method == "fast") return morpho::dilate_closed_form(L, b->se, x);
      if (method == "paper-algorithm")
        morpho::fail(Errc::BadInput, "paper-algorithm provides only an erosion procedure");
      morpho::fail(Errc::BadInput, "unknown method '" + method + "'");
    };

    morpho::Sub r;
    if (op == "erode") r = erode(d->sub);
    else if (op == "dilate") r = dilate(d->sub);
    else if (op == "open") r = dilate(erode(d->sub));
    else if (op == "close") r = erode(dilate(d->sub));
    else morpho::fail(Errc::BadInput, "unknown op '" + op + "'");
    return new morpho_sub{std::move(r)};
  });
}

char* morpho_law_ids(void) {
  return wrap([&]() -> char* {
    morpho::json a = morpho::json::array();
    for (const auto& id : morpho::law_ids()) a.push_back(id);
    return dup_string(morpho::dump_json(a));
  });
}

char* morpho_check_law(const morpho_lattice* lat, const morpho_se* b, const char* law,
                       int exhaustive, uint64_t samples, uint64_t seed) {
  return wrap([&]() -> char* {
    need(lat, "lattice");
    need(b, "structuring element");
    need(law, "law");
    morpho::Sampler s;
    s.exhaustive = exhaustive != 0;
    s.samples = samples;
    s.seed = seed;
    morpho::LawReport r = morpho::check_law(*lat->lat, b->se, law, s);
    return dup_string(morpho::dump_json(morpho::law_report_to_json(*lat->lat, r)));
  });
}

char* morpho_compare_methods(const morpho_lattice* lat, const morpho_se* b,
                             const morpho_sub* d) {
  return wrap([&]() -> char* {
    need(lat, "lattice");
    need(b, "structuring element");
    need(d, "subobject");
    morpho::MethodComparison c = morpho::compare_methods(*lat->lat, b->se, d->sub);
    return dup_string(morpho::dump_json(morpho::comparison_to_json(*lat->lat, c)));
  });
}

char* morpho_diverge_scan(const morpho_lattice* lat, const morpho_se* b, uint64_t samples,
                          uint64_t seed) {
  return wrap([&]() -> char* {
    need(lat, "lattice");
    need(b, "structuring element");
    std::mt19937_64 rng(seed);
    morpho::json out;
    out["samples"] = samples;
    out["seed"] = seed;
    morpho::json divergent = morpho::json::array();
    for (uint64_t i = 0; i < samples; ++i) {
      morpho::Sub d = lat->lat->random_sub(rng);
      morpho::MethodComparison c = morpho::compare_methods(*lat->lat, b->se, d);
      if (!c.all_agree) divergent.push_back(morpho::comparison_to_json(*lat->lat, c));
    }
    out["all_agree"] = divergent.empty();
    out["divergent"] = std::move(divergent);
    return dup_string(morpho::dump_json(out));
  });
}

morpho_model* morpho_model_parse(const char* model_json) {
  return wrap([&]() -> morpho_model* {
    return new morpho_model{morpho::model_from_json(parse_json(model_json, "model"))};
  });
}

char* morpho_model_dump(const morpho_model* m) {
  return wrap([&]() -> char* {
    need(m, "model");
    return dup_string(morpho::dump_json(morpho::model_to_json(m->model)));
  });
}

void morpho_model_free(morpho_model* m) { delete m; }

char* morpho_model_eval(const morpho_model* m, const char* formula) {
  return wrap([&]() -> char* {
    need(m, "model");
    need(formula, "formula");
    morpho::Sub r = morpho::eval(m->model, morpho::parse_formula(formula));
    return dup_string(morpho::dump_json(morpho::sub_to_json(*m->model.lat, r)));
  });
}

int morpho_model_check(const morpho_model* m, const char* formula, int* out_satisfied) {
  return wrap_status([&] {
    need(m, "model");
    need(formula, "formula");
    need(out_satisfied, "output");
    *out_satisfied = morpho::satisfies(m->model, morpho::parse_formula(formula)) ? 1 : 0;
  });
}

char* morpho_axiom_suite(const morpho_model* m, const char* profile, uint64_t samples,
                         uint64_t seed) {
  return wrap([&]() -> char* {
    need(m, "model");
    need(profile, "profile");
    morpho::SuiteOptions opt;
    if (samples) opt.samples = samples;
    opt.seed = seed;
    auto reports = morpho::validate_axiom_suite(m->model, profile, opt);
    morpho::json a = morpho::json::array();
    for (const auto& r : reports)
      a.push_back(morpho::law_report_to_json(*m->model.lat, r));
    return dup_string(morpho::dump_json(a));
  });
}

char* morpho_check_proof(const char* proof_json) {
  return wrap([&]() -> char* {
    morpho::Derivation d = morpho::proof_from_json(parse_json(proof_json, "proof"));
    morpho::ProofResult r = morpho::check_derivation(d);
    morpho::json j;
    j["ok"] = r.ok;
    j["failed_line"] = r.failed_line;
    j["reason"] = r.reason;
    j["classification"] = r.classification;
    if (r.conclusion) j["conclusion"] = morpho::print_formula(r.conclusion);
    else j["conclusion"] = nullptr;
    return dup_string(morpho::dump_json(j));
  });
}

char* morpho_formula_roundtrip(const char* formula) {
  return wrap([&]() -> char* {
    need(formula, "formula");
    return dup_string(morpho::print_formula(morpho::parse_formula(formula)));
  });
}

char* morpho_to_dot(const morpho_lattice* lat, const morpho_sub* result,
                    const morpho_sub* baseline) {
  return wrap([&]() -> char* {
    need(lat, "lattice");
    need(result, "result");
    return dup_string(
        morpho::to_dot(*lat->lat, result->sub, baseline ? &baseline->sub : nullptr));
  });
}

}  // extern "C"
