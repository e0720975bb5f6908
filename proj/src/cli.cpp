#include "skewspan/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "skewspan/io.hpp"
#include "skewspan/mutation.hpp"

namespace skewspan {

namespace {

struct Context {
  const CliOptions& opts;
  std::ostream& out;
  std::ostream& err;
};

template <class T>
const T& expect_kind(const Instance& inst, const char* wanted) {
  const auto* value = std::get_if<T>(&inst);
  if (!value) {
    throw Error(ErrorKind::parse_error,
                std::string("expected a ") + wanted + " file, got " + std::string(instance_kind(inst)));
  }
  return *value;
}

void emit_instance(const Context& ctx, const Instance& inst) {
  if (ctx.opts.out) {
    save_instance(inst, *ctx.opts.out);
  } else {
    ctx.out << print_instance(inst).dump(2) << "\n";
  }
}

void emit_report(const Context& ctx, std::ostream& os, const Report& rep) {
  if (ctx.opts.structured) {
    os << report_to_json(rep).dump(2) << "\n";
  } else {
    os << rep.to_string();
  }
}

int cmd_verify(const Context& ctx, const Instance& inst) {
  auto rep = verify(expect_kind<SkewMonoidaleData>(inst, "monoidale"));
  auto structured = axiom_report_to_json(rep).dump(2);
  if (ctx.opts.structured) {
    ctx.out << structured << "\n";
  } else {
    ctx.out << rep.to_string() << "structured:\n" << structured << "\n";
  }
  return rep.ok() ? kExitOk : kExitFailed;
}

int cmd_extract(const Context& ctx, const Instance& inst) {
  const auto& m = expect_kind<SkewMonoidaleData>(inst, "monoidale");
  auto rep = verify(m);
  if (!rep.ok()) {
    ctx.err << rep.to_string();
    return kExitFailed;
  }
  emit_instance(ctx, extract(m));
  return kExitOk;
}

int cmd_build(const Context& ctx, const Instance& inst) {
  const auto& rs = expect_kind<RStructure>(inst, "rstructure");
  auto cond = check_conditions(rs);
  if (!conditions_hold(cond)) {
    emit_report(ctx, ctx.err, cond);
    return kExitFailed;
  }
  emit_instance(ctx, build(rs));
  return kExitOk;
}

int cmd_roundtrip(const Context& ctx, const Instance& inst) {
  const auto& m = expect_kind<SkewMonoidaleData>(inst, "monoidale");
  auto rep = verify(m);
  if (!rep.ok()) {
    ctx.err << rep.to_string();
    return kExitFailed;
  }
  auto rt = roundtrip(m);
  if (ctx.opts.structured) {
    Json out{{"isomorphic", rt.isomorphic}};
    if (!rt.isomorphic) out["detail"] = rt.detail;
    ctx.out << out.dump(2) << "\n";
  } else {
    ctx.out << "round trip: " << (rt.isomorphic ? "isomorphic" : "NOT isomorphic (" + rt.detail + ")") << "\n";
    if (rt.isomorphic) {
      for (const auto& [u, v] : rt.unit_iso.entries()) ctx.out << "  U: " << u.to_string() << " -> " << v.to_string() << "\n";
    }
  }
  return rt.isomorphic ? kExitOk : kExitFailed;
}

FinCat valid_category(const Instance& inst) {
  const auto& c = expect_kind<FinCat>(inst, "category");
  if (auto rep = cat_validate(c); !rep.ok()) throw Error(ErrorKind::invalid_category, rep.to_string());
  return c;
}

int cmd_enumerate(const Context& ctx, const Instance& inst) {
  auto c = valid_category(inst);
  std::vector<RStructure> found;
  enumerate_rstructures(c, ctx.opts.cap, [&](const RStructure& rs) { found.push_back(rs); });
  auto dual = count_monoidales_on(c, ctx.opts.cap);
  bool agree = dual == found.size();
  if (ctx.opts.structured) {
    Json list = Json::array();
    for (const auto& rs : found) list.push_back(print_instance(rs)["functions"]["R_objects"]["map"]);
    ctx.out << Json{{"rstructures", found.size()}, {"monoidales", dual}, {"agree", agree}, {"R_objects", list}}.dump(2)
            << "\n";
  } else {
    ctx.out << "rstructures: " << found.size() << "\nmonoidales: " << dual << "\nagree: " << (agree ? "yes" : "NO")
            << "\n";
    for (std::size_t i = 0; i < found.size(); ++i) {
      ctx.out << "#" << i << " R on objects:";
      for (const auto& [f, x] : found[i].R.on_objects.entries()) ctx.out << " " << f.to_string() << "->" << x.to_string();
      ctx.out << "\n";
    }
  }
  return agree ? kExitOk : kExitFailed;
}

int cmd_nerve(const Context& ctx, const Instance& inst) {
  auto S = nerve(valid_category(inst), ctx.opts.depth);
  auto rep = simp_validate(S);
  if (ctx.opts.structured) {
    Json levels = Json::array();
    for (const auto& level : S.levels) {
      Json l = Json::array();
      for (const auto& e : level) l.push_back(element_to_json(e));
      levels.push_back(std::move(l));
    }
    ctx.out << Json{{"depth", S.depth}, {"levels", levels}, {"identities", report_to_json(rep)}}.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < S.levels.size(); ++k) {
      ctx.out << "level " << k << " (" << S.levels[k].size() << "): " << S.levels[k].to_string() << "\n";
    }
    ctx.out << rep.to_string();
  }
  return rep.ok() ? kExitOk : kExitFailed;
}

int cmd_dec(const Context& ctx, const Instance& inst) {
  emit_instance(ctx, dec_cat(valid_category(inst)).cat);
  return kExitOk;
}

int cmd_from_monoid(const Context& ctx, const Instance& inst) {
  emit_instance(ctx, monoid_to_monoidale(expect_kind<FinMonoid>(inst, "monoid")));
  return kExitOk;
}

int cmd_from_category(const Context& ctx, const Instance& inst) {
  auto c = valid_category(inst);
  emit_instance(ctx, ctx.opts.restricted ? restricted_unit_monoidale(c) : category_to_monoidale(c));
  return kExitOk;
}

int cmd_fuzz(const Context& ctx, const Instance& inst) {
  const auto& m = expect_kind<SkewMonoidaleData>(inst, "monoidale");
  std::mt19937_64 rng(ctx.opts.seed);
  std::size_t evaluated = 0, failing = 0, disagreements = 0;
  Json cases = Json::array();
  for (std::size_t i = 0; i < ctx.opts.count; ++i) {
    auto mu = random_mutation(m, rng);
    if (!mu) break;
    auto rep = verify(apply_mutation(m, *mu));
    if (!rep.well_formed()) continue;
    ++evaluated;
    if (!rep.ok()) ++failing;
    if (!rep.checkers_agree()) {
      ++disagreements;
      cases.push_back(mu->to_string());
      ctx.err << "DISAGREE " << mu->to_string() << "\n";
    }
  }
  if (ctx.opts.structured) {
    ctx.out << Json{{"seed", ctx.opts.seed},   {"mutations", ctx.opts.count},   {"well_formed", evaluated},
                    {"failing", failing},       {"disagreements", disagreements}, {"cases", cases}}
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "seed " << ctx.opts.seed << ": " << ctx.opts.count << " mutations, " << evaluated << " well-formed, "
            << failing << " failing, " << disagreements << " checker disagreements\n";
  }
  return disagreements == 0 ? kExitOk : kExitFailed;
}

using Command = std::function<int(const Context&, const Instance&)>;

const std::map<std::string, Command>& table() {
  static const std::map<std::string, Command> t{
      {"verify", cmd_verify},       {"extract", cmd_extract},         {"build", cmd_build},
      {"roundtrip", cmd_roundtrip}, {"enumerate", cmd_enumerate},     {"nerve", cmd_nerve},
      {"dec", cmd_dec},             {"from-monoid", cmd_from_monoid}, {"from-category", cmd_from_category},
      {"fuzz", cmd_fuzz},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> names{"verify", "extract",     "build",         "roundtrip", "enumerate",
                                              "nerve",  "dec",         "from-monoid",   "from-category", "fuzz"};
  return names;
}

int run_command(const std::string& command, const std::string& path, const CliOptions& opts, std::ostream& out,
                std::ostream& err) {
  auto it = table().find(command);
  if (it == table().end()) {
    err << "unknown command " << command << "\n";
    return kExitInput;
  }
  Context ctx{opts, out, err};
  try {
    return it->second(ctx, load_instance(path));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::axioms_fail:
      case ErrorKind::conditions_fail:
        return kExitFailed;
      default:
        return kExitInput;
    }
  }
}

}  // namespace skewspan
