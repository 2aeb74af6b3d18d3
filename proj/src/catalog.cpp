#include "qq/catalog.hpp"

#include "qq/error.hpp"

namespace qq {

const std::vector<Cone>& cone_catalog() {
    static const std::vector<Cone> catalog = [] {
        std::vector<Cone> cs;
        cs.push_back(Cone::zero());
        cs.push_back(Cone::full());
        for (Direction d : {Direction{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}})
            cs.push_back(Cone::line(d));
        for (Direction d : {Direction{1, 0}, {0, 1}, {-1, 0}, {1, 1}, {-1, -1}, {2, 1}})
            cs.push_back(Cone::ray(d));
        auto four_flavors = [&](Direction lo, Direction hi) {
            for (bool lc : {true, false})
                for (bool hc : {true, false}) cs.push_back(Cone::fan(lo, lc, hi, hc));
        };
        four_flavors({1, 0}, {0, 1});   // quarter
        four_flavors({1, 0}, {1, 1});   // eighth
        four_flavors({1, 0}, {-1, 0});  // upper half-plane
        four_flavors({1, 0}, {-1, 2});  // wide, beyond a quarter
        four_flavors({0, 1}, {0, -1});  // left half-plane
        four_flavors({2, 1}, {1, 2});   // narrow, off-axis
        cs.push_back(Cone::fan({0, -1}, true, {1, 1}, true));   // crossing the axis
        cs.push_back(Cone::fan({0, -1}, false, {1, 1}, false));
        cs.push_back(Cone::fan({-1, -1}, true, {1, -1}, true)); // lower quarter
        if (cs.size() != 40) throw error(errc::domain, "internal: cone catalog size drifted");
        return cs;
    }();
    return catalog;
}

const std::vector<QQModule>& module_catalog() {
    static const std::vector<QQModule> catalog = [] {
        std::vector<QQModule> ms;
        ms.push_back(QQModule::zero_module());

        // a spread of level-(m+1) cones to pair with each level-m cone
        const std::vector<Cone> second = {
            Cone::zero(),
            Cone::full(),
            Cone::line({1, 0}),
            Cone::ray({0, 1}),
            Cone::fan({1, 0}, true, {0, 1}, true),
            Cone::fan({1, 0}, false, {0, 1}, false),
        };

        // level 0 must lie on the real axis
        for (const Cone& m0 :
             {Cone::ray({1, 0}), Cone::ray({-1, 0}), Cone::line({1, 0})}) {
            if (cone_is_symmetric(m0)) {
                ms.push_back(QQModule::levels(0, m0, Cone::full()));
                continue;
            }
            for (const Cone& m1 : second) ms.push_back(QQModule::levels(0, m0, m1));
            ms.push_back(QQModule::levels(0, m0, Cone::fan({1, 0}, true, {-1, 0}, true)));
        }

        for (unsigned m : {1u, 2u}) {
            for (const Cone& c : cone_catalog()) {
                if (c.is_zero()) continue;
                if (cone_is_symmetric(c)) {
                    ms.push_back(QQModule::levels(m, c, Cone::full()));
                    continue;
                }
                for (const Cone& m1 : second) ms.push_back(QQModule::levels(m, c, m1));
            }
        }
        return ms;
    }();
    return catalog;
}

const std::vector<Char2Module>& char2_catalog() {
    static const std::vector<Char2Module> catalog = [] {
        std::vector<Char2Module> ms;
        ms.push_back(Char2Module::d1(FinalSegment::empty()));
        const std::vector<Dyadic> cuts = {
            Dyadic::integer(0), Dyadic::make(1, 1), Dyadic::integer(1),
            Dyadic::make(3, 1), Dyadic::integer(2),
        };
        auto push_unique = [&](const Char2Module& m) {
            for (const Char2Module& e : ms)
                if (e == m) return;
            ms.push_back(m);
        };
        for (const Dyadic& cut : cuts) {
            for (bool inclusive : {true, false})
                push_unique(Char2Module::d1(FinalSegment::from(cut, inclusive)));
            if (cut == Dyadic::integer(0)) continue; // refined forms at 0 fold into d1
            for (F4Submodule level :
                 {F4Submodule::f2(), F4Submodule::omega_line(), F4Submodule::omega1_line()})
                push_unique(Char2Module::d2(FinalSegment::from(cut, true), level));
        }
        return ms;
    }();
    return catalog;
}

const std::vector<Descriptor>& descriptor_grid() {
    static const std::vector<Descriptor> grid = [] {
        std::vector<Descriptor> ds;
        ds.push_back(Descriptor::zero());
        for (long long num = 0; num <= 24; ++num)
            for (unsigned p = 1; p < 4; ++p)
                ds.push_back(Descriptor::of(Dyadic::make(num, 3), F4(p)));
        return ds;
    }();
    return grid;
}

} // namespace qq
