#include "duzeta/verify.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "duzeta/enumerator.hpp"
#include "duzeta/group.hpp"
#include "duzeta/render.hpp"
#include "duzeta/theta.hpp"
#include "duzeta/zeta.hpp"

namespace duzeta {

namespace {

using nlohmann::json;

UniPoly parse_poly(std::initializer_list<const char*> coeffs) {
    std::vector<Rational> c;
    for (const char* s : coeffs) c.push_back(Rational::parse(s));
    return UniPoly(std::move(c));
}

CheckEntry check_table_reproduction() {
    CheckEntry e{.name = "table_reproduction"};
    json fails = json::array();

    FormalWeightEnumerator phi8 = normalized_eisenstein(8);
    std::vector<Rational> exp8{1, 0, 0, 0, 14, 0, 0, 0, 1};
    if (phi8.coeffs() != exp8) fails.push_back({{"check", "phi8"}, {"got", to_plain(phi8.as_bivariate())}});

    FormalWeightEnumerator phi12 = normalized_eisenstein(12);
    std::vector<Rational> exp12{1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1};
    if (phi12.coeffs() != exp12) fails.push_back({{"check", "phi12"}, {"got", to_plain(phi12.as_bivariate())}});

    UniPoly p8_expected = parse_poly({"1/5", "2/5", "2/5"});
    UniPoly p8 = zeta_via_linear_system(phi8, Rational(2)).poly;
    if (p8 != p8_expected) fails.push_back({{"check", "P8"}, {"got", to_plain(p8)}});

    UniPoly p12_expected = parse_poly({"-1/15", "-2/15", "-2/15", "0", "4/15", "8/15", "8/15"});
    UniPoly p12 = zeta_via_linear_system(phi12, Rational(2)).poly;
    if (p12 != p12_expected) fails.push_back({{"check", "P12"}, {"got", to_plain(p12)}});

    e.verdict = fails.empty();
    e.witness["failures"] = std::move(fails);
    return e;
}

CheckEntry check_reynolds_vs_closed(std::size_t max_ell) {
    CheckEntry e{.name = "reynolds_vs_closed_form"};
    std::size_t hi = std::min<std::size_t>(40, max_ell);
    e.params["ell_range"] = {8, hi};
    json fails = json::array();
    const MatrixGroup& h1 = h1_group();
    for (std::size_t ell = 8; ell <= hi; ell += 4) {
        auto avg = normalize(reynolds_power(h1, ell));
        auto closed = normalize(eisenstein_closed_form(ell));
        if (!avg || !closed || !(*avg == *closed)) fails.push_back(ell);
    }
    e.verdict = fails.empty();
    e.witness["failing_ell"] = std::move(fails);
    return e;
}

CheckEntry check_reynolds_vanishing() {
    CheckEntry e{.name = "reynolds_vanishing"};
    e.params["ell_range"] = {1, 40};
    json fails = json::array();
    const MatrixGroup& h1 = h1_group();
    for (std::size_t ell = 1; ell <= 40; ++ell) {
        bool should_vanish = (ell % 4 != 0) || ell == 4;
        if (should_vanish && !reynolds_power(h1, ell).is_zero()) fails.push_back(ell);
    }
    e.verdict = fails.empty();
    e.witness["failing_ell"] = std::move(fails);
    return e;
}

CheckEntry check_group_order() {
    CheckEntry e{.name = "group_order"};
    const MatrixGroup& h1 = h1_group();
    bool all_unitary = true;
    bool inverse_closed = true;
    for (const auto& m : h1.elements()) {
        if (!m.is_unitary()) all_unitary = false;
        if (!h1.contains(m.conjugate_transpose())) inverse_closed = false;
    }
    e.verdict = h1.order() == 96 && all_unitary && inverse_closed;
    e.witness["order"] = h1.order();
    e.witness["all_unitary"] = all_unitary;
    e.witness["inverse_closed"] = inverse_closed;
    return e;
}

CheckEntry check_cross_method_eisenstein(std::size_t max_ell) {
    CheckEntry e{.name = "zeta_cross_method_eisenstein"};
    e.params["ell_range"] = {8, max_ell};
    json fails = json::array();
    for (std::size_t ell = 8; ell <= max_ell; ell += 4) {
        FormalWeightEnumerator phi = normalized_eisenstein(ell);
        UniPoly a = zeta_via_linear_system(phi, Rational(2)).poly;
        UniPoly b = zeta_via_series(phi, Rational(2)).poly;
        UniPoly c = zeta_closed_form(ell).poly;
        UniPoly d = zeta_expanded_form(ell).poly;
        if (!(a == b && b == c && c == d)) fails.push_back(ell);
    }
    e.verdict = fails.empty();
    e.witness["failing_ell"] = std::move(fails);
    return e;
}

CheckEntry check_cross_method_corpus(const std::string& corpus_dir) {
    CheckEntry e{.name = "zeta_cross_method_corpus"};
    e.params["corpus_dir"] = corpus_dir;
    if (corpus_dir.empty()) {
        e.verdict = true;
        e.witness["note"] = "no corpus directory supplied";
        return e;
    }
    json fails = json::array();
    for (const char* name : {"hamming8.json", "golay24.json"}) {
        FormalWeightEnumerator f = load_enumerator_file(corpus_dir + "/" + name);
        UniPoly a = zeta_via_linear_system(f, Rational(2)).poly;
        UniPoly b = zeta_via_series(f, Rational(2)).poly;
        if (a != b) fails.push_back(name);
    }
    // the extended Hamming enumerator coincides with normalized phi_8
    FormalWeightEnumerator hamming = load_enumerator_file(corpus_dir + "/hamming8.json");
    if (!(hamming == normalized_eisenstein(8))) fails.push_back("hamming8 != phi8");
    e.verdict = fails.empty();
    e.witness["failures"] = std::move(fails);
    return e;
}

CheckEntry check_cross_method_random() {
    CheckEntry e{.name = "zeta_cross_method_random"};
    e.params["count"] = 50;
    e.params["max_degree"] = 12;
    std::mt19937_64 rng(0x5EED0001ULL);
    json fails = json::array();
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng() % 11;  // 2..12
        std::size_t d = 1 + rng() % n;   // 1..n
        std::vector<Rational> coeffs(n + 1);
        coeffs[0] = Rational(1);
        for (std::size_t i = d; i <= n; ++i) {
            long num = static_cast<long>(rng() % 19) - 9;
            long den = 1 + static_cast<long>(rng() % 9);
            coeffs[i] = Rational(num, den);
        }
        if (coeffs[d].is_zero()) coeffs[d] = Rational(1, 3);
        FormalWeightEnumerator f(n, std::move(coeffs));
        UniPoly a = zeta_via_linear_system(f, Rational(2)).poly;
        UniPoly b = zeta_via_series(f, Rational(2)).poly;
        if (a != b) fails.push_back(trial);
    }
    e.verdict = fails.empty();
    e.witness["failing_trials"] = std::move(fails);
    return e;
}

CheckEntry check_corpus_roundtrip(const std::string& corpus_dir) {
    CheckEntry e{.name = "corpus_roundtrip"};
    e.params["corpus_dir"] = corpus_dir;
    if (corpus_dir.empty()) {
        e.verdict = true;
        e.witness["note"] = "no corpus directory supplied";
        return e;
    }
    json fails = json::array();
    for (std::size_t ell = 8; ell <= 40; ell += 4) {
        std::string name = "phi" + std::to_string(ell) + ".json";
        FormalWeightEnumerator f = load_enumerator_file(corpus_dir + "/" + name);
        if (!(f == normalized_eisenstein(ell))) fails.push_back(name);
        if (!(load_enumerator(store_enumerator(f)) == f)) fails.push_back(name + " (roundtrip)");
    }
    e.verdict = fails.empty();
    e.witness["failures"] = std::move(fails);
    return e;
}

CheckEntry check_rha_structural(std::size_t max_ell) {
    CheckEntry e{.name = "rha_structural"};
    e.params["ell_range"] = {8, max_ell};
    json fails = json::array();
    for (std::size_t ell = 8; ell <= max_ell; ell += 4)
        if (!rha_check_structural(ell)) fails.push_back(ell);
    e.verdict = fails.empty();
    e.witness["failing_ell"] = std::move(fails);
    return e;
}

CheckEntry check_rha_numeric(std::size_t max_ell) {
    CheckEntry e{.name = "rha_numeric"};
    e.params["ell_range"] = {8, max_ell};
    e.params["tolerance"] = 1e-9;
    json fails = json::array();
    double worst = 0.0;
    for (std::size_t ell = 8; ell <= max_ell; ell += 4) {
        RootReport r = rha_check_numeric(zeta_closed_form(ell), 1e-9);
        for (double d : r.deviations) worst = std::max(worst, d);
        if (!r.verdict) fails.push_back(ell);
    }
    e.verdict = fails.empty();
    e.witness["failing_ell"] = std::move(fails);
    e.witness["max_deviation"] = worst;
    return e;
}

CheckEntry check_interlacing(std::size_t max_ell) {
    CheckEntry e{.name = "interlacing"};
    std::size_t hi = max_ell >= 4 ? max_ell - 4 : 0;
    e.params["ell_range"] = {8, hi};
    json fails = json::array();
    bool shared_8_12 = false;
    for (std::size_t ell = 8; ell <= hi; ell += 4) {
        InterlaceReport rep = interlace_check(ell);
        if (!rep.arcs_covered) fails.push_back(ell);
        if (ell == 8) shared_8_12 = !rep.common_angles.empty();
    }
    e.verdict = fails.empty() && shared_8_12;
    e.witness["failing_ell"] = std::move(fails);
    e.witness["pair_8_12_shares_zeros"] = shared_8_12;
    return e;
}

CheckEntry check_zeta_p_integrality(std::uint32_t max_prime) {
    CheckEntry e{.name = "zeta_p_integrality"};
    e.params["prime_range"] = {7, max_prime};
    json fails = json::array();
    for (std::uint32_t p = 7; p <= max_prime; p += 2) {
        if (!is_prime(p)) continue;
        ZetaPolynomial zp = zeta_closed_form(2 * (p - 1));
        for (const auto& c : zp.poly.coeffs()) {
            if (!is_p_integral(c, p)) {
                fails.push_back({{"p", p}, {"coefficient", c.str()}});
                break;
            }
        }
    }
    e.verdict = fails.empty();
    e.witness["failures"] = std::move(fails);
    return e;
}

CheckEntry check_zeta_p5_exclusion() {
    CheckEntry e{.name = "zeta_p5_exclusion", .expected_exclusion = true};
    e.params["p"] = 5;
    // l = 2(5-1) = 8: P_8 has denominator 5 throughout
    PIntegralityReport rep = p_integrality_report(zeta_closed_form(8));
    auto it = rep.min_valuation.find(mpz_class(5));
    e.verdict = it != rep.min_valuation.end() && it->second == -1 &&
                rep.violating.count(mpz_class(5)) == 1;
    e.witness["min_valuation_at_5"] = it == rep.min_valuation.end() ? json(nullptr) : json(it->second);
    return e;
}

CheckEntry check_enumerator_p_integrality(std::uint32_t max_prime) {
    CheckEntry e{.name = "enumerator_p_integrality"};
    e.params["prime_range"] = {5, max_prime};
    json fails = json::array();
    for (std::uint32_t p = 5; p <= max_prime; p += 2) {
        if (!is_prime(p)) continue;
        FormalWeightEnumerator phi = normalized_eisenstein(2 * (p - 1));
        for (const auto& c : phi.coeffs()) {
            if (!is_p_integral(c, p)) {
                fails.push_back({{"p", p}, {"coefficient", c.str()}});
                break;
            }
        }
    }
    e.verdict = fails.empty();
    e.witness["failures"] = std::move(fails);
    return e;
}

CheckEntry check_enumerator_p3_vacuous() {
    CheckEntry e{.name = "enumerator_p3_vacuous", .expected_exclusion = true};
    e.params["p"] = 3;
    // l = 2(3-1) = 4 and phi_4 vanishes identically
    e.verdict = reynolds_power(h1_group(), 4).is_zero();
    e.witness["phi4_is_zero"] = e.verdict;
    return e;
}

CheckEntry check_lemma_unit(std::uint32_t max_prime) {
    CheckEntry e{.name = "lemma_unit_check"};
    e.params["prime_range"] = {7, max_prime};
    json fails = json::array();
    for (std::uint32_t p = 7; p <= max_prime; p += 2) {
        if (!is_prime(p)) continue;
        LemmaUnitCheck chk = lemma_unit_check(p);
        if (chk.residue == 0 || !chk.case_3_mod_4_holds || !chk.case_1_mod_4_holds)
            fails.push_back(p);
    }
    e.verdict = fails.empty();
    e.witness["failures"] = std::move(fails);
    return e;
}

CheckEntry check_lemma_p5_exclusion() {
    CheckEntry e{.name = "lemma_p5_exclusion", .expected_exclusion = true};
    e.params["p"] = 5;
    // l = 8: (-1)^2 + 2^2 = 5 = 0 mod 5 witnesses why p = 5 is excluded
    Rational c = eisenstein_leading_scalar(8);
    e.verdict = mod_p_residue(c, 5) == 0;
    e.witness["scalar"] = c.str();
    return e;
}

CheckEntry check_theta_constants() {
    CheckEntry e{.name = "theta_constants"};
    e.params["order"] = 400;
    json fails = json::array();
    for (int a : {0, 1}) {
        QSeries f = theta_constant(a, 400);
        for (std::size_t k = 0; k <= 400; ++k) {
            // independent route: count integers b of the right parity with b^2 = k
            long expected = 0;
            for (long b = a; static_cast<std::size_t>(b * b) <= k; b += 2)
                if (static_cast<std::size_t>(b * b) == k) expected += (b == 0) ? 1 : 2;
            if (f.coeff(k) != Rational(expected)) {
                fails.push_back({{"a", a}, {"k", k}});
                break;
            }
            if (!f.coeff(k).is_integer() || f.coeff(k).sign() < 0) {
                fails.push_back({{"a", a}, {"k", k}, {"reason", "not a nonnegative integer"}});
                break;
            }
        }
    }
    e.verdict = fails.empty();
    e.witness["failures"] = std::move(fails);
    return e;
}

CheckEntry check_theta_e8() {
    CheckEntry e{.name = "theta_e8_series"};
    e.params["order"] = 40;
    FormalWeightEnumerator phi8 = normalized_eisenstein(8);
    QSeries s = th_map(phi8, 40);

    // independent expansion via binary powering
    QSeries f0 = theta_constant(0, 40);
    QSeries f1 = theta_constant(1, 40);
    QSeries direct = f0.pow(8) + (f0.pow(4) * f1.pow(4)).scaled(Rational(14)) + f1.pow(8);

    std::vector<long> prefix{1, 0, 0, 0, 240, 0, 0, 0, 2160, 0, 0, 0, 6720};
    bool prefix_ok = true;
    for (std::size_t k = 0; k < prefix.size(); ++k)
        if (s.coeff(k) != Rational(prefix[k])) prefix_ok = false;
    e.verdict = prefix_ok && s == direct;
    e.witness["prefix_ok"] = prefix_ok;
    e.witness["routes_agree"] = s == direct;
    return e;
}

CheckEntry check_theta_p_integrality(std::uint32_t p, std::size_t order) {
    CheckEntry e{.name = "theta_p_integrality"};
    e.params["p"] = p;
    e.params["order"] = order;
    QSeries s = th_map(normalized_eisenstein(2 * (p - 1)), order);
    QSeriesIntegrality r = qseries_p_integrality(s, p);
    e.verdict = r.integral;
    if (r.first_violation) e.witness["first_violation"] = *r.first_violation;
    return e;
}

} // namespace

VerificationReport run_verification(const VerifyOptions& opts) {
    struct Task {
        std::string name;
        std::function<CheckEntry()> fn;
    };
    std::vector<Task> tasks;
    auto add = [&](std::string name, std::function<CheckEntry()> fn) {
        tasks.push_back({std::move(name), std::move(fn)});
    };
    add("table_reproduction", check_table_reproduction);
    add("reynolds_vs_closed_form", [&] { return check_reynolds_vs_closed(opts.max_ell); });
    add("reynolds_vanishing", check_reynolds_vanishing);
    add("group_order", check_group_order);
    add("zeta_cross_method_eisenstein", [&] { return check_cross_method_eisenstein(opts.max_ell); });
    add("zeta_cross_method_corpus", [&] { return check_cross_method_corpus(opts.corpus_dir); });
    add("zeta_cross_method_random", check_cross_method_random);
    add("corpus_roundtrip", [&] { return check_corpus_roundtrip(opts.corpus_dir); });
    add("rha_structural", [&] { return check_rha_structural(opts.max_ell); });
    add("rha_numeric", [&] { return check_rha_numeric(opts.max_ell); });
    add("interlacing", [&] { return check_interlacing(opts.max_ell); });
    add("zeta_p_integrality", [&] { return check_zeta_p_integrality(opts.max_prime); });
    if (opts.max_prime >= 5) add("zeta_p5_exclusion", check_zeta_p5_exclusion);
    add("enumerator_p_integrality", [&] { return check_enumerator_p_integrality(opts.max_prime); });
    add("enumerator_p3_vacuous", check_enumerator_p3_vacuous);
    add("lemma_unit_check", [&] { return check_lemma_unit(opts.max_prime); });
    if (opts.max_prime >= 5) add("lemma_p5_exclusion", check_lemma_p5_exclusion);
    add("theta_constants", check_theta_constants);
    add("theta_e8_series", check_theta_e8);
    for (std::uint32_t p = 7; p <= std::min<std::uint32_t>(31, opts.max_prime); p += 2) {
        if (!is_prime(p)) continue;
        add("theta_p_integrality_" + std::to_string(p),
            [p, &opts] { return check_theta_p_integrality(p, opts.theta_order); });
    }

    std::vector<CheckEntry> entries(tasks.size());
    auto run_one = [&](std::size_t i) {
        try {
            entries[i] = tasks[i].fn();
        } catch (const std::exception& ex) {
            entries[i].name = tasks[i].name;
            entries[i].verdict = false;
            entries[i].witness["exception"] = ex.what();
        }
    };

    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) run_one(i);
            });
        }
        for (auto& t : workers) t.join();
    }

    VerificationReport report;
    report.entries = std::move(entries);
    report.overall_verdict = true;
    for (const auto& e : report.entries)
        if (!e.verdict) report.overall_verdict = false;
    return report;
}

nlohmann::json VerificationReport::to_json() const {
    json doc;
    json checks = json::array();
    for (const auto& e : entries) {
        json item;
        item["name"] = e.name;
        item["params"] = e.params.is_null() ? json::object() : e.params;
        item["verdict"] = e.verdict;
        if (e.expected_exclusion) item["expected_exclusion"] = true;
        item["witness"] = e.witness.is_null() ? json::object() : e.witness;
        checks.push_back(std::move(item));
    }
    doc["checks"] = std::move(checks);
    doc["overall_verdict"] = overall_verdict;
    return doc;
}

std::string VerificationReport::to_string() const { return to_json().dump(2) + "\n"; }

} // namespace duzeta
