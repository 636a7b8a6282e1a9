#include "skewring.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "harness.hpp"

using namespace skewring;

struct sr_group {
  FiniteGroup group;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sr_status fail(sr_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

template <typename Fn>
sr_status guard(Fn&& fn) {
  try {
    fn();
    return SR_OK;
  } catch (const ParseError& e) {
    return fail(SR_ERR_INPUT, e.what());
  } catch (const InputError& e) {
    return fail(SR_ERR_INPUT, e.what());
  } catch (const RealizeError& e) {
    return fail(SR_ERR_REALIZE, e.what());
  } catch (const OverflowError& e) {
    return fail(SR_ERR_OVERFLOW, e.what());
  } catch (const std::exception& e) {
    return fail(SR_ERR_INTERNAL, e.what());
  }
}

std::vector<int> kernel_seeds(const FiniteGroup& g, const char* kernel) {
  if (!kernel) throw InputError("kernel argument is null");
  std::vector<int> seeds;
  if (!g.generator_names().empty()) {
    for (const Word& w : parse_word_list(kernel, g.generator_names()))
      seeds.push_back(g.eval_word(w));
    return seeds;
  }
  // table-backed group: comma-separated element indices
  std::string tok;
  std::string text(kernel);
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) tok += text[i];
      continue;
    }
    if (tok.empty()) throw InputError("empty kernel element index");
    seeds.push_back(std::stoi(tok));
    tok.clear();
  }
  return seeds;
}

}  // namespace

extern "C" {

const char* sr_last_error(void) { return g_last_error.c_str(); }

void sr_string_free(char* s) { std::free(s); }

sr_status sr_group_from_presentation(const char* text, sr_group** out) {
  if (!text || !out) return fail(SR_ERR_INPUT, "null argument");
  return guard([&] {
    *out = new sr_group{FiniteGroup::realize(parse_presentation(text))};
  });
}

sr_status sr_group_from_table(const char* text, sr_group** out) {
  if (!text || !out) return fail(SR_ERR_INPUT, "null argument");
  return guard([&] { *out = new sr_group{FiniteGroup::from_table_text(text)}; });
}

void sr_group_free(sr_group* g) { delete g; }

sr_status sr_group_order(const sr_group* g, int* out) {
  if (!g || !out) return fail(SR_ERR_INPUT, "null argument");
  *out = g->group.order();
  return SR_OK;
}

sr_status sr_kernels_list(const sr_group* g, char** out) {
  if (!g || !out) return fail(SR_ERR_INPUT, "null argument");
  return guard([&] {
    std::string text;
    for (const Subgroup& k : enumerate_kernels(g->group)) {
      if (g->group.generator_names().empty()) {
        // table-backed group: emit element indices
        std::vector<int> gens = subgroup_generators(k);
        for (size_t i = 0; i < gens.size(); ++i) {
          if (i) text += ',';
          text += std::to_string(gens[i]);
        }
      } else {
        std::string label = subgroup_label(k);
        // strip the <...> wrapper so lines round-trip as kernel arguments
        text += label.substr(1, label.size() - 2);
      }
      text += '\n';
    }
    *out = dup_string(text);
  });
}

sr_status sr_check(const sr_group* g, const char* kernel, const char* ring,
                   int* out_commutative, char** out_witness) {
  if (!g || !ring || !out_commutative)
    return fail(SR_ERR_INPUT, "null argument");
  return guard([&] {
    Orientation o = make_orientation(g->group, kernel_seeds(g->group, kernel));
    CommVerdict v = is_skew_commutative(o, parse_ring(ring));
    *out_commutative = v.commutative ? 1 : 0;
    if (out_witness) {
      std::string w;
      if (!v.commutative)
        w = "[" + format_element(v.witness->left) + " , " +
            format_element(v.witness->right) +
            "] = " + format_element(v.witness->comm);
      *out_witness = dup_string(w);
    }
  });
}

sr_status sr_classify(const sr_group* g, const char* kernel,
                      const char* ringclass, char** out_case) {
  if (!g || !ringclass || !out_case) return fail(SR_ERR_INPUT, "null argument");
  return guard([&] {
    RingClass rc = parse_ring_class(ringclass);
    if (g->group.is_abelian()) {
      *out_case = dup_string("abelian");
      return;
    }
    Orientation o = make_orientation(g->group, kernel_seeds(g->group, kernel));
    std::string label;
    if (auto c = classify(g->group, o.kernel, rc)) {
      label = case_label(c->case_id);
      if (!c->kernel_variant.empty()) label += ":" + c->kernel_variant;
    }
    *out_case = dup_string(label);
  });
}

sr_status sr_verify_paper(const char* format, char** out_report, int* out_ok) {
  if (!format || !out_report || !out_ok)
    return fail(SR_ERR_INPUT, "null argument");
  return guard([&] {
    CensusReport rep = verify_paper();
    *out_report = dup_string(report_emit(rep, format));
    *out_ok = rep.ok() ? 1 : 0;
  });
}

sr_status sr_census(int max_rank, const char* rings, const char* format,
                    char** out_report, int* out_ok) {
  if (!rings || !format || !out_report || !out_ok)
    return fail(SR_ERR_INPUT, "null argument");
  return guard([&] {
    std::vector<CoeffRing> rs;
    std::string text(rings), tok;
    for (size_t i = 0; i <= text.size(); ++i) {
      if (i < text.size() && text[i] != ',') {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) tok += text[i];
        continue;
      }
      if (tok.empty()) throw InputError("empty ring in list");
      rs.push_back(parse_ring(tok));
      tok.clear();
    }
    CensusReport rep = census(max_rank, rs);
    *out_report = dup_string(report_emit(rep, format));
    *out_ok = rep.ok() ? 1 : 0;
  });
}

sr_status sr_audit(const sr_group* g, const char* kernel, const char* ring,
                   char** out_report, int* out_ok) {
  if (!g || !ring || !out_report || !out_ok)
    return fail(SR_ERR_INPUT, "null argument");
  return guard([&] {
    Orientation o = make_orientation(g->group, kernel_seeds(g->group, kernel));
    CoeffRing r = parse_ring(ring);
    if (g->group.is_abelian())
      throw InputError("audit expects a nonabelian group");
    if (!is_skew_commutative(o, r).commutative)
      throw InputError("audit expects a commutative instance");
    std::string text;
    bool ok = true;
    for (const AuditFinding& f : audit_commutative_instance(o, r)) {
      text += f.assertion;
      text += f.violated ? " VIOLATED: " : " ok: ";
      text += f.detail;
      text += '\n';
      if (f.violated) ok = false;
    }
    *out_report = dup_string(text);
    *out_ok = ok ? 1 : 0;
  });
}

}  // extern "C"
