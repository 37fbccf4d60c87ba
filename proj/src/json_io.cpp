#include "wreathfock/json_io.hpp"

#include "wreathfock/cache.hpp"

#include <memory>
#include <mutex>

namespace wreathfock {

const int kCharTableCacheVersion = 1;

Json to_json(const Rational& q) { return Json(rational_to_string(q)); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw std::invalid_argument("rational_from_json: expected string");
    return rational_from_string(j.get<std::string>());
}

Json to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(to_json(q));
    return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return Cyclotomic(rational_from_json(j));
    unsigned order = j.at("order").get<unsigned>();
    std::vector<Rational> coeffs;
    for (const auto& q : j.at("coeffs")) coeffs.push_back(rational_from_json(q));
    return Cyclotomic(order, std::move(coeffs));
}

Json to_json(const Partition& p) {
    Json out = Json::array();
    for (int part : p.parts()) out.push_back(part);
    return out;
}

Partition partition_from_json(const Json& j) {
    std::vector<int> parts;
    for (const auto& part : j) parts.push_back(part.get<int>());
    return Partition(std::move(parts));
}

Json to_json(const MultiPartition& mp) {
    Json out = Json::array();
    for (const auto& comp : mp.components()) out.push_back(to_json(comp));
    return out;
}

MultiPartition multipartition_from_json(const Json& j) {
    std::vector<Partition> comps;
    for (const auto& comp : j) comps.push_back(partition_from_json(comp));
    unsigned r = static_cast<unsigned>(comps.size());
    return MultiPartition(r, std::move(comps));
}

Json to_json(const RatSeries& s) {
    Json coeffs = Json::array();
    for (int e = s.min_exp(); e <= s.trunc(); ++e) coeffs.push_back(to_json(s.coeff(e)));
    return Json{{"var", s.var()}, {"min_exp", s.min_exp()}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

RatSeries series_from_json(const Json& j) {
    RatSeries s(j.at("var").get<std::string>(), j.at("min_exp").get<int>(),
                j.at("trunc").get<int>());
    int e = s.min_exp();
    for (const auto& c : j.at("coeffs")) s.set_coeff(e++, rational_from_json(c));
    return s;
}

Json to_json(const RatMultiSeries& s) {
    Json terms = Json::array();
    for (const auto& [exps, c] : s.terms()) {
        Json e = Json::array();
        for (int x : exps) e.push_back(x);
        terms.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
    }
    return Json{{"vars", s.vars()}, {"trunc", s.trunc()}, {"terms", terms}};
}

RatMultiSeries multiseries_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    RatMultiSeries s(std::move(vars), j.at("trunc").get<int>());
    for (const auto& term : j.at("terms")) {
        std::vector<int> exps = term.at("exp").get<std::vector<int>>();
        s.add_term(exps, rational_from_json(term.at("coeff")));
    }
    return s;
}

Json to_json(const ClassFunction& f) {
    Json values = Json::array();
    for (const auto& [mp, v] : f.values)
        values.push_back(Json{{"type", to_json(mp)}, {"value", to_json(v)}});
    return Json{{"r", f.r}, {"n", f.n}, {"values", values}};
}

ClassFunction class_function_from_json(const Json& j) {
    ClassFunction f{j.at("r").get<unsigned>(), j.at("n").get<int>(), {}};
    for (const auto& entry : j.at("values"))
        f.set(multipartition_from_json(entry.at("type")), cyclotomic_from_json(entry.at("value")));
    return f;
}

Json to_json(const FockVector<Rational>& v) {
    Json terms = Json::array();
    for (const auto& [mp, c] : v.terms())
        terms.push_back(Json{{"mp", to_json(mp)}, {"coeff", to_json(c)}});
    Json charge = Json::array();
    for (int c : v.charge().coords) charge.push_back(c);
    return Json{{"charge", charge}, {"terms", terms}};
}

FockVector<Rational> fock_vector_from_json(const Json& j) {
    std::vector<int> coords = j.at("charge").get<std::vector<int>>();
    unsigned r = static_cast<unsigned>(coords.size());
    FockVector<Rational> v(r, Charge(r, coords));
    for (const auto& term : j.at("terms"))
        v.add_term(multipartition_from_json(term.at("mp")), rational_from_json(term.at("coeff")));
    return v;
}

Json to_json(const CharacterTable& t) {
    Json classes = Json::array();
    for (const auto& mp : t.classes()) classes.push_back(to_json(mp));
    Json matrix = Json::array();
    for (const auto& row : t.matrix()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        matrix.push_back(r);
    }
    return Json{{"version", kCharTableCacheVersion},
                {"r", t.r()},
                {"n", t.n()},
                {"classes", classes},
                {"matrix", matrix}};
}

CharacterTable char_table_from_json(const Json& j) {
    unsigned r = j.at("r").get<unsigned>();
    int n = j.at("n").get<int>();
    std::vector<MultiPartition> classes;
    for (const auto& mp : j.at("classes")) classes.push_back(multipartition_from_json(mp));
    std::vector<std::vector<Cyclotomic>> matrix;
    for (const auto& row : j.at("matrix")) {
        std::vector<Cyclotomic> vals;
        for (const auto& v : row) vals.push_back(cyclotomic_from_json(v));
        matrix.push_back(std::move(vals));
    }
    return CharacterTable(r, n, std::move(classes), std::move(matrix));
}

Json to_json(const GradedStructureConstants& gc) {
    Json rows = Json::array();
    for (const auto& [key, value] : gc.top) {
        auto [a, b, c] = key;
        rows.push_back(Json{{"rho", to_json(gc.classes[a])},
                            {"sigma", to_json(gc.classes[b])},
                            {"tau", to_json(gc.classes[c])},
                            {"c", value.str()}});
    }
    return Json{{"r", gc.r}, {"n", gc.n}, {"top", rows}};
}

const CharacterTable& wreath_char_table_cached(unsigned r, int n, const std::string& cache_dir) {
    if (cache_dir.empty()) return wreath_char_table(r, n);
    static std::mutex lock;
    static std::map<std::tuple<std::string, unsigned, int>, std::unique_ptr<CharacterTable>> memo;
    std::lock_guard<std::mutex> guard(lock);
    auto& slot = memo[{cache_dir, r, n}];
    if (slot) return *slot;

    const std::string key = "chartab_r" + std::to_string(r) + "_n" + std::to_string(n) + ".json";
    if (auto payload = cache_get(cache_dir, key)) {
        try {
            if (payload->at("version").get<int>() == kCharTableCacheVersion &&
                payload->at("r").get<unsigned>() == r && payload->at("n").get<int>() == n) {
                slot = std::make_unique<CharacterTable>(char_table_from_json(*payload));
                return *slot;
            }
        } catch (const std::exception&) {
            // fall through to recompute
        }
    }
    const CharacterTable& fresh = wreath_char_table(r, n);
    cache_put(cache_dir, key, to_json(fresh));
    slot = std::make_unique<CharacterTable>(fresh);
    return *slot;
}

}  // namespace wreathfock
