#include "qq/json_io.hpp"

#include <cctype>

#include "qq/error.hpp"

namespace qq {

namespace {

[[noreturn]] void bad(const std::string& what) { throw error(errc::parse, what); }

template <class F> auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        bad(std::string("malformed JSON value: ") + e.what());
    }
}

Direction dir_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) bad("direction must be a [x, y] pair");
    return {j[0].get<long long>(), j[1].get<long long>()};
}

json dir_to_json(const Direction& d) { return json::array({d.x, d.y}); }

} // namespace

json to_json(const Series& s) {
    json coeffs = json::object();
    for (const auto& [e, c] : s.coeffs())
        coeffs[std::to_string(e)] = {{"re", c.re.get_str()}, {"im", c.im.get_str()}};
    return {{"coeffs", coeffs}, {"precision", s.precision()}};
}

Series series_from_json(const json& j) {
    return guarded([&] {
        std::map<unsigned, GaussRat> coeffs;
        for (const auto& [key, val] : j.at("coeffs").items()) {
            if (key.empty() ||
                key.find_first_not_of("0123456789") != std::string::npos)
                bad("coefficient keys are nonnegative integers: '" + key + "'");
            unsigned long e = std::stoul(key);
            if (e >= Series::max_precision)
                bad("exponent exceeds the desk-scale precision limit: " + key);
            coeffs.emplace(static_cast<unsigned>(e),
                           GaussRat(parse_rat(val.at("re").get<std::string>()),
                                    parse_rat(val.at("im").get<std::string>())));
        }
        unsigned prec = j.at("precision").get<unsigned>();
        if (prec > Series::max_precision)
            throw error(errc::limit, "requested precision exceeds the desk-scale limit of 64");
        return Series(std::move(coeffs), prec);
    });
}

json to_json(const Cone& c) {
    switch (c.kind()) {
    case Cone::Kind::zero: return {{"kind", "zero"}};
    case Cone::Kind::full: return {{"kind", "full"}};
    case Cone::Kind::line: return {{"kind", "line"}, {"axis", dir_to_json(c.axis())}};
    case Cone::Kind::ray: return {{"kind", "ray"}, {"dir", dir_to_json(c.dir())}};
    case Cone::Kind::fan:
        return {{"kind", "fan"},
                {"lo", dir_to_json(c.lo())},
                {"lo_closed", c.lo_closed()},
                {"hi", dir_to_json(c.hi())},
                {"hi_closed", c.hi_closed()}};
    }
    bad("unknown cone kind");
}

Cone cone_from_json(const json& j) {
    return guarded([&] {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "zero") return Cone::zero();
        if (kind == "full") return Cone::full();
        if (kind == "line") return Cone::line(dir_from_json(j.at("axis")));
        if (kind == "ray") return Cone::ray(dir_from_json(j.at("dir")));
        if (kind == "fan")
            return Cone::fan(dir_from_json(j.at("lo")), j.at("lo_closed").get<bool>(),
                             dir_from_json(j.at("hi")), j.at("hi_closed").get<bool>());
        bad("unknown cone kind: " + kind);
    });
}

json to_json(const QQModule& M) {
    if (M.is_zero_module()) return {{"kind", "zero"}};
    return {{"kind", "levels"},
            {"m", M.min_level()},
            {"Mm", to_json(M.cone_m())},
            {"Mm1", to_json(M.cone_m1())}};
}

QQModule module_from_json(const json& j) {
    return guarded([&] {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "zero") return QQModule::zero_module();
        if (kind == "levels")
            return QQModule::levels(j.at("m").get<unsigned>(), cone_from_json(j.at("Mm")),
                                    cone_from_json(j.at("Mm1")));
        bad("unknown module kind: " + kind);
    });
}

json to_json(const FinalSegment& s) {
    if (s.is_empty()) return {{"empty", true}};
    return {{"cut", to_string(s.cut())}, {"inclusive", s.inclusive()}};
}

FinalSegment segment_from_json(const json& j) {
    return guarded([&] {
        if (j.contains("empty") && j.at("empty").get<bool>()) return FinalSegment::empty();
        return FinalSegment::from(parse_dyadic(j.at("cut").get<std::string>()),
                                  j.at("inclusive").get<bool>());
    });
}

namespace {

json submodule_to_json(F4Submodule m) {
    json arr = json::array();
    for (unsigned b = 0; b < 4; ++b)
        if (m.contains(F4(b))) arr.push_back(b);
    return arr;
}

F4Submodule submodule_from_json(const json& j) {
    if (!j.is_array()) bad("level module must be an array of field elements 0..3");
    unsigned mask = 0;
    for (const auto& v : j) {
        unsigned b = v.get<unsigned>();
        if (b > 3) bad("field elements are encoded 0..3");
        mask |= 1u << b;
    }
    return F4Submodule::of_mask(mask | 1u);
}

} // namespace

json to_json(const Char2Module& M) {
    if (M.is_d1()) {
        json j = to_json(M.segment());
        j["kind"] = "d1";
        return j;
    }
    json j = to_json(M.segment());
    j["kind"] = "d2";
    j["M"] = submodule_to_json(M.level());
    return j;
}

Char2Module char2_from_json(const json& j) {
    return guarded([&] {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "d1") return Char2Module::d1(segment_from_json(j));
        if (kind == "d2")
            return Char2Module::d2(segment_from_json(j), submodule_from_json(j.at("M")));
        bad("unknown module kind: " + kind);
    });
}

json to_json(const C2Classifier& c) {
    json j = {{"segment", to_json(c.segment)}};
    j["level"] = c.level ? submodule_to_json(*c.level) : json(nullptr);
    return j;
}

C2Classifier classifier_from_json(const json& j) {
    return guarded([&] {
        C2Classifier c{segment_from_json(j.at("segment")), std::nullopt};
        if (j.contains("level") && !j.at("level").is_null())
            c.level = submodule_from_json(j.at("level"));
        return c;
    });
}

json to_json(const Descriptor& d) {
    if (d.is_zero()) return {{"v", nullptr}};
    return {{"v", to_string(*d.v)}, {"p", d.p.bits()}};
}

Descriptor descriptor_from_json(const json& j) {
    return guarded([&] {
        if (!j.contains("v") || j.at("v").is_null()) return Descriptor::zero();
        F4 p(j.at("p").get<unsigned>());
        if (p.is_zero()) bad("nonzero valuation needs a nonzero leading coefficient");
        return Descriptor::of(parse_dyadic(j.at("v").get<std::string>()), p);
    });
}

json to_json(const Report& r) {
    return {{"name", r.name},
            {"checked", r.checked},
            {"failed", r.failed},
            {"failures", r.examples},
            {"seed", r.seed}};
}

json to_json(const suites::SuiteResult& s) {
    json reports = json::array();
    for (const Report& r : s.reports) reports.push_back(to_json(r));
    return {{"suite", s.name}, {"pass", s.pass()}, {"seconds", s.seconds},
            {"reports", reports}};
}

namespace {

json parse_json_input(const std::string& input) {
    json j = json::parse(input, nullptr, false);
    if (j.is_discarded()) bad("malformed JSON: " + input);
    return j;
}

bool looks_like_json(const std::string& s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

} // namespace

Cone cone_from_text_or_json(const std::string& input) {
    if (looks_like_json(input)) return cone_from_json(parse_json_input(input));
    return parse_cone(input);
}

QQModule module_from_text_or_json(const std::string& input) {
    if (looks_like_json(input)) return module_from_json(parse_json_input(input));
    throw error(errc::parse, "modules are given as JSON descriptors");
}

Char2Module char2_from_text_or_json(const std::string& input) {
    if (looks_like_json(input)) return char2_from_json(parse_json_input(input));
    throw error(errc::parse, "characteristic-two modules are given as JSON descriptors");
}

} // namespace qq
