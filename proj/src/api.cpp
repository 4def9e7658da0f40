#include "iqf/api.hpp"

#include "iqf/classify.hpp"
#include "iqf/errors.hpp"
#include "iqf/roots.hpp"
#include "iqf/walks.hpp"

namespace iqf::api {

namespace {

Json switch_to_json(const OrthogonalMatrix& o) { return Json{{"signs", o.signs}, {"perm", o.perm}}; }

Json classification_to_json(const Classification& c) {
    return Json{{"dynkin", c.type.name()}, {"corank", c.corank}};
}

}  // namespace

Json qf_info(const Json& form) {
    QuadraticForm q = form_from_json(form);
    FormReport r = analyze(q);
    Json radical = Json::array();
    for (const IntVec& v : r.radical_basis) radical.push_back(vec_to_json(v));
    Json out{{"n", q.n()},
             {"rank", r.rank},
             {"corank", r.corank},
             {"non_negative", r.non_negative},
             {"connected", r.connected},
             {"irreducible", r.irreducible},
             {"unit", r.unit},
             {"semi_unit", r.semi_unit},
             {"cox_regular", r.cox_regular},
             {"semi_cox_regular", r.semi_cox_regular},
             {"fully_regular", r.fully_regular},
             {"classic", r.classic},
             {"dotted_loops", int_to_json(r.dotted_loops)},
             {"radical_basis", radical},
             {"bigraph", bigraph_to_json(bigraph_of(q))},
             {"dynkin", nullptr}};
    if (r.non_negative) {
        try {
            out["dynkin"] = dynkin_type(q).type.name();
        } catch (const Error& e) {
            out["dynkin_error"] = e.what();
        }
    }
    return out;
}

Json qf_realize(const Json& form) {
    QuadraticForm q = form_from_json(form);
    BidirectedGraph b = realize(q);
    std::size_t loops = 0;
    for (std::size_t i = 1; i <= b.arrows(); ++i) loops += b.arrow(i).is_bidirected_loop();
    return Json{{"graph", graph_to_json(b)},
                {"vertices", b.vertices()},
                {"arrows", b.arrows()},
                {"bidirected_loops", loops},
                {"round_trip", incidence_form(b) == q}};
}

Json qf_canonical_c(const Json& form) {
    QuadraticForm q = form_from_json(form);
    CanonicalC c = canonical_c(q);
    return Json{{"r", c.r},
                {"c1", c.c1},
                {"c2", c.c2},
                {"transform", transform_to_json(c.t)},
                {"steps", c.t.to_string()},
                {"target", form_to_json(compose(q, c.t.matrix))}};
}

Json qf_solve(const Json& form, const std::string& d, long long bound, bool walk_sum) {
    QuadraticForm q = form_from_json(form);
    SolveOptions opts;
    opts.bound = bound;
    opts.walk_sum = walk_sum;
    Representation r = solve(q, int_from_json(Json(d)), opts);
    return Json{{"d", int_to_json(r.d)}, {"x", vec_to_json(r.x)}, {"strategy", r.strategy}};
}

Json bg_form(const Json& graph) {
    BidirectedGraph b = graph_from_json(graph);
    QuadraticForm q = incidence_form(b);
    RankCorank rc = rank_corank(b);
    return Json{{"form", form_to_json(q)},
                {"gram", matrix_to_json(q.gram())},
                {"incidence", matrix_to_json(incidence_matrix(b))},
                {"rank", rc.rank},
                {"corank", rc.corank}};
}

Json bg_balance(const Json& graph) {
    BidirectedGraph b = graph_from_json(graph);
    BalanceResult r = balance(b);
    Json out{{"beta", r.beta}, {"witness", nullptr}, {"switch", nullptr}};
    if (r.witness) {
        out["witness"] = walk_to_json(*r.witness);
        out["witness_text"] = format_walk(*r.witness);
    }
    if (r.quiver_switch) out["switch"] = switch_to_json(*r.quiver_switch);
    return out;
}

Json bg_roots(const Json& graph, int set, std::size_t max_len, long long bound) {
    BidirectedGraph b = graph_from_json(graph);
    require(set >= 0 && set <= 2, ErrorKind::InvalidInput, "--set takes 0, 1 or 2");
    Json out{{"set", set}};
    if (max_len == 0 && bound > 0) {
        BoxedRoots r = boxed_walk_roots(b, set, bound, 1);
        out["roots"] = roots_to_json(r.roots);
        out["length_cap"] = r.length_cap;
        if (set != 2) out["complete"] = r.complete;
        return out;
    }
    const std::size_t cap = max_len ? max_len : 2 * b.arrows() + 2;
    out["roots"] = roots_to_json(walk_roots(b, set, cap, bound));
    out["length_cap"] = cap;
    return out;
}

Json bg_line(const Json& graph) { return Json{{"bigraph", bigraph_to_json(line_bigraph(graph_from_json(graph)))}}; }

Json bg_switch_equiv(const Json& graph, const Json& other) {
    auto o = switching_equivalent(graph_from_json(graph), graph_from_json(other));
    return Json{{"equivalent", o.has_value()}, {"switch", o ? switch_to_json(*o) : Json(nullptr)}};
}

Json gentle_euler(const Json& quiver) {
    GentlePresentation p = quiver_from_json(quiver);
    EulerData e = euler_pipeline(p);
    Json forbidden = Json::array(), permitted = Json::array(), dynkin = Json::array();
    for (const Thread& t : e.threads.forbidden) forbidden.push_back(t.label(p));
    for (const Thread& t : e.threads.permitted) permitted.push_back(t.label(p));
    for (std::size_t k = 0; k < e.dynkin.size(); ++k) {
        Json c = e.dynkin[k] ? classification_to_json(*e.dynkin[k])
                             : Json{{"dynkin", nullptr}, {"corank", analyze(restrict(e.q, e.components[k])).corank}};
        c["component"] = e.components[k];
        dynkin.push_back(c);
    }
    return Json{{"cartan", matrix_to_json(e.cartan)},
                {"form", form_to_json(e.q)},
                {"incidence", matrix_to_json(e.incidence)},
                {"graph", graph_to_json(e.graph)},
                {"forbidden", forbidden},
                {"permitted", permitted},
                {"phi", e.threads.phi},
                {"dynkin", dynkin}};
}

}  // namespace iqf::api
