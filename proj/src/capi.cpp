#include "semibrick/semibrick.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

#include "semibrick/builtins.hpp"
#include "semibrick/commands.hpp"
#include "semibrick/errors.hpp"

struct sb_quiver {
  std::shared_ptr<const semibrick::Quiver> quiver;
};

struct sb_rep {
  semibrick::Rep rep;
};

struct sb_replist {
  std::vector<semibrick::Rep> reps;
};

struct sb_report {
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

sb_status fail(sb_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
sb_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SB_OK;
  } catch (const semibrick::UsageError& e) {
    return fail(SB_ERR_USAGE, e.what());
  } catch (const semibrick::InvalidInput& e) {
    return fail(SB_ERR_INVALID_INPUT, e.what());
  } catch (const semibrick::BudgetExceeded& e) {
    return fail(SB_ERR_BUDGET, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SB_ERR_INTERNAL, std::string("internal error: ") + e.what());
  } catch (...) {
    return fail(SB_ERR_INTERNAL, "internal error");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw semibrick::UsageError(std::string("null ") + what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

semibrick::CommandOptions to_options(const sb_options* o) {
  semibrick::CommandOptions out;
  if (!o) return out;
  out.assume_brick = o->assume_brick != 0;
  out.budget = o->budget;
  out.levels = o->levels;
  if (o->has_seed) out.seed = o->seed;
  return out;
}

sb_status emit(sb_report** out, const std::function<semibrick::Report()>& run) {
  return guarded([&] {
    require(out, "output pointer");
    auto r = run();
    *out = new sb_report{semibrick::io::serialize_report(r.payload), std::move(r.text)};
  });
}

using Unary = semibrick::Report (*)(const semibrick::Rep&);
using Binary = semibrick::Report (*)(const semibrick::Rep&, const semibrick::Rep&);
using WithMembers = semibrick::Report (*)(const semibrick::Rep&, const std::vector<semibrick::Rep>&,
                                          const semibrick::CommandOptions&);

sb_status unary(Unary f, const sb_rep* m, sb_report** out) {
  return emit(out, [&] {
    require(m, "representation");
    return f(m->rep);
  });
}

sb_status binary(Binary f, const sb_rep* l, const sb_rep* r, sb_report** out) {
  return emit(out, [&] {
    require(l, "left representation");
    require(r, "right representation");
    return f(l->rep, r->rep);
  });
}

sb_status with_members(WithMembers f, const sb_rep* m, const sb_replist* list, const sb_options* opts,
                       sb_report** out) {
  return emit(out, [&] {
    require(m, "representation");
    require(list, "member list");
    return f(m->rep, list->reps, to_options(opts));
  });
}

}  // namespace

extern "C" {

const char* sb_version(void) { return "1.0.0"; }

const char* sb_last_error(void) { return last_error.c_str(); }

void sb_options_init(sb_options* opts) {
  if (!opts) return;
  opts->assume_brick = 0;
  opts->budget = semibrick::kDefaultDimensionBudget;
  opts->levels = 1;
  opts->has_seed = 0;
  opts->seed = 0;
}

void sb_string_free(char* s) { std::free(s); }

sb_status sb_quiver_builtin(const char* name, sb_quiver** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output pointer");
    *out = new sb_quiver{semibrick::builtin_quiver(name)};
  });
}

sb_status sb_quiver_parse(const char* text, sb_quiver** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new sb_quiver{std::make_shared<const semibrick::Quiver>(semibrick::io::parse_quiver(text))};
  });
}

sb_status sb_quiver_serialize(const sb_quiver* q, char** out) {
  return guarded([&] {
    require(q, "quiver");
    require(out, "output pointer");
    *out = copy_string(semibrick::io::serialize(*q->quiver));
  });
}

void sb_quiver_free(sb_quiver* q) { delete q; }

sb_status sb_rep_builtin(const sb_quiver* q, const char* field, const char* name, sb_rep** out) {
  return guarded([&] {
    require(q, "quiver");
    require(field, "field");
    require(name, "name");
    require(out, "output pointer");
    auto f = semibrick::Field::parse(field);
    auto r = semibrick::builtin_rep(q->quiver, f, name);
    if (!r) throw semibrick::UsageError("unknown builtin representation \"" + std::string(name) + "\" on " + q->quiver->name());
    *out = new sb_rep{std::move(*r)};
  });
}

sb_status sb_rep_parse(const char* text, sb_rep** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new sb_rep{semibrick::io::parse_rep(text)};
  });
}

sb_status sb_rep_serialize(const sb_rep* r, char** out) {
  return guarded([&] {
    require(r, "representation");
    require(out, "output pointer");
    *out = copy_string(semibrick::io::serialize(r->rep));
  });
}

size_t sb_rep_total_dim(const sb_rep* r) { return r ? r->rep.total_dim() : 0; }

void sb_rep_free(sb_rep* r) { delete r; }

sb_status sb_replist_new(sb_replist** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new sb_replist{};
  });
}

sb_status sb_replist_push(sb_replist* list, const sb_rep* r) {
  return guarded([&] {
    require(list, "member list");
    require(r, "representation");
    list->reps.push_back(r->rep);
  });
}

sb_status sb_replist_append_document(sb_replist* list, const char* text) {
  return guarded([&] {
    require(list, "member list");
    require(text, "text");
    for (auto& r : semibrick::io::parse_members(text)) list->reps.push_back(std::move(r));
  });
}

size_t sb_replist_size(const sb_replist* list) { return list ? list->reps.size() : 0; }

void sb_replist_free(sb_replist* list) { delete list; }

const char* sb_report_json(const sb_report* rep) { return rep ? rep->json.c_str() : ""; }
const char* sb_report_text(const sb_report* rep) { return rep ? rep->text.c_str() : ""; }
void sb_report_free(sb_report* rep) { delete rep; }

sb_status sb_cmd_hom(const sb_rep* l, const sb_rep* r, sb_report** out) { return binary(semibrick::cmd_hom, l, r, out); }
sb_status sb_cmd_ext(const sb_rep* l, const sb_rep* r, sb_report** out) { return binary(semibrick::cmd_ext, l, r, out); }
sb_status sb_cmd_euler(const sb_rep* l, const sb_rep* r, sb_report** out) {
  return binary(semibrick::cmd_euler, l, r, out);
}
sb_status sb_cmd_defect(const sb_rep* m, sb_report** out) { return unary(semibrick::cmd_defect, m, out); }
sb_status sb_cmd_brick(const sb_rep* m, sb_report** out) { return unary(semibrick::cmd_brick, m, out); }

sb_status sb_cmd_semibrick(const sb_replist* members, const sb_options* opts, sb_report** out) {
  return emit(out, [&] {
    require(members, "member list");
    return semibrick::cmd_semibrick(members->reps, to_options(opts));
  });
}

sb_status sb_cmd_socle(const sb_rep* m, const sb_replist* l, const sb_options* o, sb_report** out) {
  return with_members(semibrick::cmd_socle, m, l, o, out);
}
sb_status sb_cmd_filtration(const sb_rep* m, const sb_replist* l, const sb_options* o, sb_report** out) {
  return with_members(semibrick::cmd_filtration, m, l, o, out);
}
sb_status sb_cmd_membership(const sb_rep* m, const sb_replist* l, const sb_options* o, sb_report** out) {
  return with_members(semibrick::cmd_membership, m, l, o, out);
}
sb_status sb_cmd_universal(const sb_rep* m, const sb_replist* l, const sb_options* o, sb_report** out) {
  return with_members(semibrick::cmd_universal, m, l, o, out);
}
sb_status sb_cmd_tower(const sb_rep* m, const sb_replist* l, const sb_options* o, sb_report** out) {
  return with_members(semibrick::cmd_tower, m, l, o, out);
}
sb_status sb_cmd_endtower(const sb_rep* m, const sb_replist* l, const sb_options* o, sb_report** out) {
  return with_members(semibrick::cmd_endtower, m, l, o, out);
}
sb_status sb_cmd_uniserial(const sb_rep* m, const sb_replist* l, const sb_options* o, sb_report** out) {
  return with_members(semibrick::cmd_uniserial, m, l, o, out);
}
sb_status sb_cmd_preproj(const sb_rep* m, const sb_replist* l, const sb_options* o, sb_report** out) {
  return with_members(semibrick::cmd_preproj, m, l, o, out);
}

sb_status sb_cmd_demo_kronecker(size_t r, const char* field, sb_report** out) {
  return emit(out, [&] {
    require(field, "field");
    return semibrick::cmd_demo_kronecker(r, semibrick::Field::parse(field));
  });
}

}  // extern "C"
