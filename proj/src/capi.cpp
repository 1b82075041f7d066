// coxcell — C API shim over the C++ core.  Translates 1-based boundary
// words, maps exceptions to status codes with a thread-local message, and
// renders every result as deterministic JSON.
// SPDX-License-Identifier: MIT
#include "coxcell.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "core/collapse.hpp"
#include "core/coxeter.hpp"
#include "core/hecke.hpp"
#include "core/poset.hpp"
#include "core/tnn.hpp"
#include "json.hpp"

struct cxc_system {
  explicit cxc_system(coxcell::CoxeterSystem s) : impl(std::move(s)) {}
  coxcell::CoxeterSystem impl;
};

namespace {

using coxcell::Face;
using coxcell::GroupElement;
using coxcell::InputError;
using coxcell::Word;
using nlohmann::json;

thread_local std::string g_last_error;

void require(bool ok, const char* message) {
  if (!ok) throw InputError(message);
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs the body, translating exceptions into status codes.  The body
// returns CXC_OK or CXC_VIOLATION and must fill outputs only at the end.
template <typename F>
cxc_status guarded(F&& body) noexcept {
  try {
    g_last_error.clear();
    return body();
  } catch (const InputError& e) {
    g_last_error = e.what();
    return CXC_INVALID_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CXC_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return CXC_ERROR;
  }
}

Word to_word(const int* word, int len) {
  require(len >= 0, "negative word length");
  require(len == 0 || word != nullptr, "word pointer is null");
  Word w(static_cast<size_t>(len));
  for (int k = 0; k < len; ++k) w[static_cast<size_t>(k)] = word[k] - 1;
  return w;
}

std::string element_string(const coxcell::CoxeterSystem& sys, const GroupElement& g) {
  const Word cw = sys.canonical_word(g);
  return cw.empty() ? std::string("e") : coxcell::word_to_string(cw);
}

json letters_json(const Word& w) {
  json a = json::array();
  for (int x : w) a.push_back(x + 1);
  return a;
}

json moves_json(const std::vector<coxcell::Move>& moves) {
  json a = json::array();
  for (const coxcell::Move& mv : moves) {
    json m;
    m["kind"] = mv.kind == 0 ? "swap" : "braid";
    m["slot"] = mv.slot + 1;
    m["len"] = mv.len;
    a.push_back(m);
  }
  return a;
}

json script_json(const coxcell::PairScript& sc, bool with_braids) {
  json p;
  p["pair"] = json::array({sc.pair.first + 1, sc.pair.second + 1});
  p["segment"] = json::array({sc.seg_begin + 1, sc.seg_end});
  if (with_braids) p["braids"] = sc.braid_count;
  p["moves"] = moves_json(sc.moves);
  return p;
}

cxc_status finish(const json& j, char** json_out) {
  require(json_out != nullptr, "output pointer is null");
  *json_out = dup_string(j.dump(2));
  return CXC_OK;
}

}  // namespace

extern "C" {

const char* cxc_version(void) { return "0.1.0"; }

const char* cxc_last_error(void) { return g_last_error.c_str(); }

void cxc_free_string(char* s) { std::free(s); }

cxc_status cxc_system_create(char type, int rank, cxc_system** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    auto sys = std::make_unique<cxc_system>(coxcell::CoxeterSystem::from_type(type, rank));
    *out = sys.release();
    return CXC_OK;
  });
}

cxc_status cxc_system_create_from_matrix(int rank, const int* entries, cxc_system** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    require(rank >= 1, "rank must be positive");
    require(entries != nullptr, "matrix pointer is null");
    std::vector<std::vector<int>> m(static_cast<size_t>(rank),
                                    std::vector<int>(static_cast<size_t>(rank)));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = entries[i * rank + j];
    auto sys = std::make_unique<cxc_system>(coxcell::CoxeterSystem::from_matrix(m));
    *out = sys.release();
    return CXC_OK;
  });
}

cxc_status cxc_system_create_from_file(const char* path, cxc_system** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    require(path != nullptr, "path pointer is null");
    auto sys = std::make_unique<cxc_system>(coxcell::CoxeterSystem::from_file(path));
    *out = sys.release();
    return CXC_OK;
  });
}

void cxc_system_destroy(cxc_system* sys) { delete sys; }

cxc_status cxc_system_describe(const cxc_system* sys, char** json_out) {
  return guarded([&] {
    require(sys != nullptr, "system pointer is null");
    const coxcell::CoxeterSystem& S = sys->impl;
    json j;
    j["label"] = S.label();
    j["rank"] = S.rank();
    json cox = json::array(), cart = json::array();
    for (int i = 0; i < S.rank(); ++i) {
      json row = json::array(), crow = json::array();
      for (int k = 0; k < S.rank(); ++k) {
        row.push_back(S.m(i, k));
        crow.push_back(S.cartan(i, k));
      }
      cox.push_back(row);
      cart.push_back(crow);
    }
    j["coxeter_matrix"] = cox;
    j["cartan"] = cart;
    j["positive_roots"] = S.positive_roots().size();
    j["longest_length"] = S.length(S.longest_element());
    return finish(j, json_out);
  });
}

cxc_status cxc_word_analyze(const cxc_system* sys, const int* word, int len,
                            char** json_out) {
  return guarded([&] {
    require(sys != nullptr, "system pointer is null");
    const coxcell::CoxeterSystem& S = sys->impl;
    const Word w = to_word(word, len);
    S.validate_word(w);
    const GroupElement g = S.evaluate_word(w);
    json j;
    j["letters"] = letters_json(w);
    j["reduced"] = S.is_reduced(w);
    j["product"] = element_string(S, g);
    j["length"] = S.length(g);
    j["absorbing"] = element_string(S, S.demazure(w));
    return finish(j, json_out);
  });
}

cxc_status cxc_hecke_report(const cxc_system* sys, const int* word, int len,
                            char** json_out) {
  return guarded([&] {
    require(sys != nullptr, "system pointer is null");
    const coxcell::CoxeterSystem& S = sys->impl;
    const Word w = to_word(word, len);
    S.validate_word(w);
    Face full(w.size());
    for (size_t k = 0; k < w.size(); ++k) full[k] = static_cast<int>(k);
    json j;
    j["letters"] = letters_json(w);
    j["reduced"] = S.is_reduced(w);
    j["absorbing"] = element_string(S, S.demazure(w));
    json dels = json::array();
    for (const coxcell::PosPair& pr : coxcell::deletion_pairs(S, w, full))
      dels.push_back(script_json(coxcell::min_long_braids(S, w, full, pr), true));
    j["deletion_pairs"] = dels;
    json omits = json::array();
    for (const coxcell::PosPair& pr : coxcell::omittable_pairs(S, w, full))
      omits.push_back(script_json(coxcell::commutation_script(S, w, full, pr), false));
    j["omittable_pairs"] = omits;
    return finish(j, json_out);
  });
}

cxc_status cxc_collapse_run(const cxc_system* sys, const int* word, int len,
                            int full_mode, int with_checks, int with_quotient,
                            char** json_out) {
  return guarded([&] {
    require(sys != nullptr, "system pointer is null");
    const coxcell::CoxeterSystem& S = sys->impl;
    const Word w = to_word(word, len);
    const coxcell::CollapseMode mode =
        full_mode ? coxcell::CollapseMode::Full : coxcell::CollapseMode::Commutation;
    const coxcell::CollapseTrace trace = coxcell::run_collapse(S, w, mode);
    bool violated = false;
    if (with_checks) {
      violated = !coxcell::verify_conditions(S, trace).empty() ||
                 !coxcell::check_termination(S, trace).empty();
    }
    if (with_quotient && mode == coxcell::CollapseMode::Full)
      violated = violated || !coxcell::check_interval_isomorphism(S, trace).empty();
    const std::string text =
        coxcell::trace_to_json(S, trace, with_checks != 0, with_quotient != 0);
    require(json_out != nullptr, "output pointer is null");
    *json_out = dup_string(text);
    return violated ? CXC_VIOLATION : CXC_OK;
  });
}

cxc_status cxc_fiber_check(const cxc_system* sys, const int* word, int len,
                           char** json_out) {
  return guarded([&] {
    require(sys != nullptr, "system pointer is null");
    const coxcell::CoxeterSystem& S = sys->impl;
    const Word w = to_word(word, len);
    const coxcell::CollapseTrace trace =
        coxcell::run_collapse(S, w, coxcell::CollapseMode::Full);
    const std::vector<std::string> violations = coxcell::verify_fibers(S, w, trace);
    json j;
    j["letters"] = letters_json(w);
    j["mode"] = "full";
    j["steps"] = trace.steps.size();
    j["violations"] = violations;
    const cxc_status rc = finish(j, json_out);
    return violations.empty() ? rc : CXC_VIOLATION;
  });
}

cxc_status cxc_interval_poset(const cxc_system* sys, const int* lower, int lower_len,
                              const int* upper, int upper_len, int with_checks,
                              char** json_out, char** dot_out) {
  return guarded([&] {
    require(sys != nullptr, "system pointer is null");
    const coxcell::CoxeterSystem& S = sys->impl;
    const Word lw = to_word(lower, lower_len);
    const Word uw = to_word(upper, upper_len);
    S.validate_word(lw);
    S.validate_word(uw);
    const GroupElement lo = S.evaluate_word(lw);
    const GroupElement up = S.evaluate_word(uw);
    require(S.bruhat_leq(lo, up),
            "the lower word's element is not below the upper word's element");
    const std::vector<GroupElement> elems = S.bruhat_interval(lo, up);
    const int sz = static_cast<int>(elems.size());
    std::vector<std::string> labels;
    std::vector<int> ranks;
    const int base = S.length(lo);
    for (const GroupElement& g : elems) {
      labels.push_back(element_string(S, g));
      ranks.push_back(S.length(g) - base);
    }
    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b)
        if (a != b && S.bruhat_leq(elems[static_cast<size_t>(a)],
                                   elems[static_cast<size_t>(b)]))
          rels.emplace_back(a, b);
    const coxcell::GradedPoset p(labels, ranks, rels);
    json j;
    j["lower"] = labels.front();
    j["upper"] = labels.back();
    j["size"] = sz;
    j["labels"] = labels;
    j["ranks"] = ranks;
    json covers = json::array();
    for (const auto& [u, v] : p.covers()) covers.push_back(json::array({u, v}));
    j["covers"] = covers;
    j["mobius"] = p.mobius(0, sz - 1);
    bool ok = true;
    if (with_checks) {
      const coxcell::CwReport rep = coxcell::check_cw_conditions(p);
      json c;
      c["graded_by_covers"] = rep.graded_by_covers;
      c["thin"] = rep.thin;
      c["eulerian"] = rep.eulerian;
      c["intervals_connected"] = rep.intervals_connected;
      c["messages"] = rep.messages;
      j["check"] = c;
      ok = rep.all_ok();
    }
    require(json_out != nullptr, "output pointer is null");
    std::unique_ptr<char, decltype(&std::free)> jtext(dup_string(j.dump(2)), &std::free);
    std::unique_ptr<char, decltype(&std::free)> dtext(nullptr, &std::free);
    if (dot_out != nullptr) dtext.reset(dup_string(p.to_dot()));
    *json_out = jtext.release();
    if (dot_out != nullptr) *dot_out = dtext.release();
    return ok ? CXC_OK : CXC_VIOLATION;
  });
}

cxc_status cxc_tnn_eval(const cxc_system* sys, const int* word, int len,
                        const char* const* params, int check_minors, int want_cell,
                        char** json_out) {
  return guarded([&] {
    require(sys != nullptr, "system pointer is null");
    const coxcell::CoxeterSystem& S = sys->impl;
    require(coxcell::is_chain_system(S),
            "the matrix model needs a chain system (type A)");
    const Word w = to_word(word, len);
    S.validate_word(w);
    require(len == 0 || params != nullptr, "parameter pointer is null");
    coxcell::ParamPoint pt;
    for (int k = 0; k < len; ++k) {
      require(params[k] != nullptr, "parameter pointer is null");
      pt.push_back(coxcell::parse_rational(params[k]));
    }
    const int n = S.rank() + 1;
    const coxcell::RationalMatrix M = coxcell::lusztig_eval(w, pt, n);
    json j;
    j["letters"] = letters_json(w);
    json pj = json::array();
    for (const coxcell::Rational& t : pt) pj.push_back(t.str());
    j["params"] = pj;
    j["size"] = n;
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int c = 0; c < n; ++c) row.push_back(M.at(i, c).str());
      rows.push_back(row);
    }
    j["matrix"] = rows;
    j["support"] = letters_json(coxcell::support_of(pt));
    bool violated = false;
    if (check_minors || want_cell) {
      const bool tnn = coxcell::is_tnn(M);
      j["tnn"] = tnn;
      if (check_minors && !tnn) violated = true;
      if (want_cell) {
        require(tnn, "cell location needs a totally nonnegative matrix");
        j["cell"] = element_string(S, coxcell::cell_of(S, M));
      }
    }
    const cxc_status rc = finish(j, json_out);
    return violated ? CXC_VIOLATION : rc;
  });
}

}  // extern "C"
