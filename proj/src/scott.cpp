#include "applike/scott.hpp"

namespace applike::scott {

Closure::Closure(std::size_t arity, Body body)
    : arity_(arity), body_(std::make_shared<const Body>(std::move(body))) {}

Term::Term(const Accumulator& acc)
    : v(std::visit([](const auto& a) -> decltype(v) { return a; }, acc)) {}

Term call(const Term& f, std::span<const Term> args) {
  const auto* c = std::get_if<Closure>(&f.v);
  if (!c) {
    if (args.empty()) return f;
    throw ContinuationShapeError("applied a non-function", static_cast<long>(args.size()), 0);
  }
  const std::size_t remaining = c->arity();
  if (args.size() < remaining) {
    Closure partial = *c;
    partial.bound_.insert(partial.bound_.end(), args.begin(), args.end());
    return partial;
  }
  std::vector<Term> all = c->bound_;
  all.insert(all.end(), args.begin(), args.begin() + static_cast<std::ptrdiff_t>(remaining));
  Term result = (*c->body_)(all);
  return call(result, args.subspan(remaining));
}

Term call(const Term& f, std::initializer_list<Term> args) {
  return call(f, std::span<const Term>(args.begin(), args.size()));
}

Term identity() {
  return fn(1, [](std::span<const Term> a) { return a[0]; });
}

namespace {

[[noreturn]] void wrong_kind(const char* want) {
  throw ContinuationShapeError(std::string("expected ") + want + " in continuation position", 1, 0);
}

}  // namespace

const Value& value_of(const Term& t) {
  if (const auto* x = std::get_if<Value>(&t.v)) return *x;
  wrong_kind("a field value");
}

const LexemeStack& lexemes_of(const Term& t) {
  if (const auto* x = std::get_if<LexemeStack>(&t.v)) return *x;
  wrong_kind("a lexeme stack");
}

const Builder& builder_of(const Term& t) {
  if (const auto* x = std::get_if<Builder>(&t.v)) return *x;
  wrong_kind("a builder");
}

Accumulator accumulator_of(const Term& t) {
  if (const auto* x = std::get_if<Value>(&t.v)) return *x;
  if (const auto* x = std::get_if<LexemeStack>(&t.v)) return *x;
  if (const auto* x = std::get_if<Builder>(&t.v)) return *x;
  wrong_kind("an accumulator");
}

namespace {

CpsRecord feed_fields(std::vector<Term> fields) {
  return fn(1, [fields = std::move(fields)](std::span<const Term> k) {
    return call(k[0], fields);
  });
}

}  // namespace

CpsRecord destructure_device_cps(const Device& d) {
  return feed_fields({Value(d.block), Value(d.major), Value(d.minor)});
}

CpsRecord destructure_benchmark_cps(const Benchmark& b) {
  return feed_fields({b.first_app, Value(b.first_log), b.second_app, Value(b.second_log)});
}

CpsRecord destructure_cps(const Record& r) {
  return feed_fields(std::vector<Term>(r.fields.begin(), r.fields.end()));
}

CpsState cons_cps(Term s, CpsState rest) {
  return fn(1, [s = std::move(s), rest = std::move(rest)](std::span<const Term> sa) {
    return call(rest, {call(sa[0], {s})});
  });
}

CpsState chop_cps(CpsState i, Term f) {
  return fn(1, [i = std::move(i), f = std::move(f)](std::span<const Term> o) {
    Term out = o[0];
    return call(i, {fn(2, [out, f](std::span<const Term> sa) {
                   return call(out, {call(f, {sa[0], sa[1]})});
                 })});
  });
}

CpsState chop_cps(CpsState i, Step1 f) {
  return chop_cps(std::move(i), fn(2, [f = std::move(f)](std::span<const Term> a) {
                    return Term(f(accumulator_of(a[0]), value_of(a[1])));
                  }));
}

CpsState chop2_cps(CpsState i, Term f) {
  return fn(1, [i = std::move(i), f = std::move(f)](std::span<const Term> o) {
    Term out = o[0];
    return call(i, {fn(2, [out, f](std::span<const Term> sabc_d) {
                   Term sabc = sabc_d[0];
                   Term d = sabc_d[1];
                   return call(out, {fn(1, [sabc, d, f](std::span<const Term> tb) {
                                  Term next = tb[0];
                                  return call(sabc, {fn(2, [next, d, f](std::span<const Term> sa) {
                                                 return call(next, {call(f, {sa[0], sa[1], d})});
                                               })});
                                })});
                 })});
  });
}

CpsState chop2_cps(CpsState i, Step2 f) {
  return chop2_cps(std::move(i), fn(3, [f = std::move(f)](std::span<const Term> a) {
                     return Term(f(accumulator_of(a[0]), value_of(a[1]), value_of(a[2])));
                   }));
}

CpsState chop2_via_chop_cps(CpsState i, Term f) {
  return chop_cps(std::move(i), fn(3, [f = std::move(f)](std::span<const Term> a) {
                    Term sabc = a[0];
                    Term d = a[1];
                    Term next = a[2];
                    return call(sabc, {fn(2, [next, d, f](std::span<const Term> sa) {
                                   return call(next, {call(f, {sa[0], sa[1], d})});
                                 })});
                  }));
}

CpsState chop3_cps(CpsState i, Term f) {
  return chop2_cps(std::move(i), fn(4, [f = std::move(f)](std::span<const Term> a) {
                     Term sabc = a[0];
                     Term d = a[1];
                     Term g = a[2];
                     Term next = a[3];
                     return call(sabc, {fn(2, [next, d, g, f](std::span<const Term> sa) {
                                    return call(next, {call(f, {sa[0], sa[1], d, g})});
                                  })});
                   }));
}

CpsState chop3_cps(CpsState i, Step3 f) {
  return chop3_cps(std::move(i), fn(4, [f = std::move(f)](std::span<const Term> a) {
                     return Term(f(accumulator_of(a[0]), value_of(a[1]), value_of(a[2]),
                                   value_of(a[3])));
                   }));
}

CpsPipeline1 depure_show_cps(CpsDestructor destruct) {
  return [destruct = std::move(destruct)](const Record& r) {
    return cons_cps(LexemeStack{}, destruct(r));
  };
}

CpsPipeline1 depure_map_cps(std::string_view target, CpsDestructor destruct) {
  Builder seed = builder_new(target);
  return [seed = std::move(seed), destruct = std::move(destruct)](const Record& r) {
    return cons_cps(seed, destruct(r));
  };
}

CpsPipeline2 depure_zip_cps(std::string_view target, CpsDestructor da, CpsDestructor db) {
  Builder seed = builder_new(target);
  return [seed = std::move(seed), da = std::move(da), db = std::move(db)](const Record& ra,
                                                                          const Record& rb) {
    return cons_cps(cons_cps(seed, da(ra)), db(rb));
  };
}

CpsPipeline3 depure_zip3_cps(std::string_view target, CpsDestructor da, CpsDestructor db,
                             CpsDestructor dc) {
  Builder seed = builder_new(target);
  return [seed = std::move(seed), da = std::move(da), db = std::move(db), dc = std::move(dc)](
             const Record& ra, const Record& rb, const Record& rc) {
    return cons_cps(cons_cps(cons_cps(seed, da(ra)), db(rb)), dc(rc));
  };
}

namespace {

const Builder& builder_acc(const Accumulator& acc) {
  if (const auto* b = std::get_if<Builder>(&acc)) return *b;
  wrong_kind("a builder");
}

const LexemeStack& lexeme_acc(const Accumulator& acc) {
  if (const auto* s = std::get_if<LexemeStack>(&acc)) return *s;
  wrong_kind("a lexeme stack");
}

}  // namespace

CpsPipeline1 showa_cps(CpsPipeline1 p, Renderer render) {
  return hom_wrap(
      [](const CpsState& st, const Renderer& f) {
        return chop_cps(st, Step1([f](const Accumulator& s, const Value& a) -> Accumulator {
                          return lexeme_acc(s).pushed(f(a));
                        }));
      },
      std::move(p), std::move(render));
}

CpsPipeline1 mapa_cps(CpsPipeline1 p, UnaryFn f) {
  return hom_wrap(
      [](const CpsState& st, const UnaryFn& g) {
        return chop_cps(st, Step1([g](const Accumulator& s, const Value& a) -> Accumulator {
                          return apply_field(builder_acc(s), g(a));
                        }));
      },
      std::move(p), std::move(f));
}

CpsPipeline2 zipa_cps(CpsPipeline2 p, BinaryFn f) {
  return hom_wrap2(
      [](const CpsState& st, const BinaryFn& g) {
        return chop2_cps(st, Step2([g](const Accumulator& s, const Value& a,
                                       const Value& b) -> Accumulator {
                           return apply_field(builder_acc(s), g(a, b));
                         }));
      },
      std::move(p), std::move(f));
}

CpsPipeline3 zip3a_cps(CpsPipeline3 p, TernaryFn f) {
  return [p = std::move(p), f = std::move(f)](const Record& ra, const Record& rb,
                                              const Record& rc) {
    return chop3_cps(p(ra, rb, rc),
                     Step3([f](const Accumulator& s, const Value& a, const Value& b,
                               const Value& c) -> Accumulator {
                       return apply_field(builder_acc(s), f(a, b, c));
                     }));
  };
}

std::string run_show_cps(const CpsState& st) {
  return run_show(PipelineState1{lexemes_of(call(st, {identity()})), FieldList::nil()});
}

Record run_map_cps(const CpsState& st) { return finish(builder_of(call(st, {identity()}))); }

Record run_zip_cps(const CpsState& st) {
  return finish(builder_of(call(st, {identity(), identity()})));
}

Record run_zip3_cps(const CpsState& st) {
  return finish(builder_of(call(st, {identity(), identity(), identity()})));
}

CpsPipeline1 show_pipeline_cps(std::string_view type) {
  const RecordType& t = lookup_type(type);
  CpsPipeline1 p = depure_show_cps(destructure_cps);
  for (std::size_t i = 0; i < t.schema.arity(); ++i) p = showa_cps(std::move(p), render_lexeme);
  return p;
}

CpsPipeline1 map_device_pipeline_cps() {
  return mapa_cps(mapa_cps(mapa_cps(depure_map_cps(types::device, destructure_cps), ops::negate),
                           ops::add_const(100)),
                  ops::add_const(200));
}

CpsPipeline2 zip_device_pipeline_cps() {
  return zipa_cps(
      zipa_cps(zipa_cps(depure_zip_cps(types::device, destructure_cps, destructure_cps),
                        ops::logical_and),
               ops::add),
      ops::add);
}

}  // namespace applike::scott
