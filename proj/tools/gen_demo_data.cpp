// Writes data/demo_monthly.csv: a synthetic monthly macro panel, 2011-01 to
// 2022-12, shaped like a coin-demand study input (levels, not logs). The
// dependent is cointegrated with income, coin purchasing power and one
// payment-innovation proxy, with a recurring holiday dip and a regime shift
// from 2020-01. Fully deterministic; regenerate any time.
//
// Usage: gen_demo_data <output-csv>

#include <cmath>
#include <cstdio>

#include "ardl/csv.hpp"
#include "ardl/rng.hpp"
#include "ardl/series.hpp"

using namespace ardl;

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: gen_demo_data <output-csv>\n");
        return 1;
    }
    const int T = 144;  // 2011-01 .. 2022-12
    const TimePoint start{2011, 1};
    Rng rng(20110105);

    std::vector<double> lgdp(T), ir(T), latmd(T), lapmk(T), lem(T), gold(T), lvalco(T), lcmd(T);
    std::vector<double> eid(T, 0.0), c19(T, 0.0);

    // holiday months (Eid al-Fitr drifts backward through the calendar)
    const int eid_month[12] = {8, 8, 8, 7, 7, 7, 6, 6, 6, 5, 5, 5};
    for (int t = 0; t < T; ++t) {
        const TimePoint tp = start.plus_months(t);
        if (tp.month == eid_month[tp.year - 2011]) eid[t] = 1.0;
        if (tp >= TimePoint{2020, 1}) c19[t] = 1.0;
    }

    double gdp_level = 35.10, atmd = 32.80, apmk = 32.90, em = 24.70, gold_log = std::log(5600.0);
    double ir_level = 6.5;
    for (int t = 0; t < T; ++t) {
        gdp_level += 0.0038 + 0.004 * rng.next_normal() - 0.02 * c19[t] * (t > 0 && c19[t - 1] == 0.0 ? 1.0 : 0.0);
        lgdp[t] = gdp_level;
        ir_level += 0.98 * (6.0 - ir_level) * 0.02 + 0.15 * rng.next_normal();
        ir[t] = std::min(8.63, std::max(2.79, ir_level));
        atmd += 0.010 + 0.012 * rng.next_normal();
        apmk += 0.010 + 0.012 * rng.next_normal();
        em += 0.055 + 0.03 * rng.next_normal();
        latmd[t] = atmd;
        lapmk[t] = apmk;
        lem[t] = em;
        gold_log += 0.003 + 0.012 * rng.next_normal();
        gold[t] = std::exp(gold_log);
        lvalco[t] = std::log(1000.0 / gold[t]);
    }

    // coin demand error-corrects toward its long-run relation
    const double theta_gdp = 1.85, theta_valco = 0.29, theta_atmd = 0.27;
    const double c0 = 29.6 - theta_gdp * 35.4 - theta_valco * (-1.74) - theta_atmd * 33.5;
    const double adjust = -0.12;
    auto equilibrium = [&](int t) {
        return c0 + theta_gdp * lgdp[t] + theta_valco * lvalco[t] + theta_atmd * latmd[t] -
               0.008 * ir[t] + 0.11 * c19[t] - 0.13 * eid[t];
    };
    for (int t = 0; t < T; ++t) {
        if (t == 0) {
            lcmd[t] = equilibrium(0);
        } else {
            lcmd[t] = lcmd[t - 1] + adjust * (lcmd[t - 1] - equilibrium(t - 1)) +
                      0.012 * rng.next_normal();
        }
    }

    Dataset d;
    auto add_exp = [&](const char* name, const std::vector<double>& logs) {
        Series s{name, start, {}};
        for (double v : logs) s.values.push_back(std::exp(v));
        d.add(std::move(s));
    };
    add_exp("cmd", lcmd);
    add_exp("gdp", lgdp);
    d.add(Series{"ir", start, ir});
    d.add(Series{"coin_denom", start, std::vector<double>(T, 1000.0)});
    d.add(Series{"gold_price", start, gold});
    add_exp("atmd", latmd);
    add_exp("apmk", lapmk);
    add_exp("em", lem);

    write_csv(d, argv[1]);
    std::printf("wrote %s (%d months, %zu columns)\n", argv[1], T, d.all().size() + 1);
    return 0;
}
