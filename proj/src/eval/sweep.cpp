#include "maskfill/eval/sweep.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "maskfill/util/num.hpp"

namespace maskfill::eval {

namespace {

double or_nan(const std::optional<double>& v) {
    return v.has_value() ? *v : std::numeric_limits<double>::quiet_NaN();
}

} // namespace

std::vector<SweepPoint> sweep(const text::Dataset& dataset, const models::ModelSet& models,
                              const engine::AttackConfig& base, std::span<const double> ks,
                              std::span<const double> ls, std::size_t workers) {
    if (ks.empty() || ls.empty()) throw std::invalid_argument("empty sweep grid");

    std::vector<SweepPoint> points;
    points.reserve(ks.size() * ls.size());
    for (double k : ks) {
        for (double l : ls) {
            engine::AttackConfig config = base;
            config.mlm_threshold = k;
            config.sim_threshold = l;
            std::vector<engine::AttackResult> results =
                engine::attack_dataset(dataset, models, config, workers);
            MetricsReport report = aggregate(results, models.perplexity.get(), models.grammar.get(),
                                             models.similarity.get());
            SweepPoint point;
            point.k = k;
            point.l = l;
            point.a_rate = or_nan(report.a_rate);
            point.sim = or_nan(report.sim);
            point.ppl = or_nan(report.ppl);
            points.push_back(point);
        }
    }
    return points;
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepPoint>& points) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write csv file: " + path.string());
    out << "k,l,a_rate,sim,ppl\n";
    for (const SweepPoint& p : points) {
        out << util::fmt_double(p.k) << ',' << util::fmt_double(p.l) << ','
            << util::fmt_double(p.a_rate) << ',' << util::fmt_double(p.sim) << ','
            << util::fmt_double(p.ppl) << "\n";
    }
    if (!out) throw std::runtime_error("failed writing csv file: " + path.string());
}

std::vector<SweepPoint> read_sweep_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open csv file: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv file: " + path.string());
    if (line != "k,l,a_rate,sim,ppl") {
        throw std::runtime_error("unexpected csv header: '" + line + "'");
    }
    std::vector<SweepPoint> points;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                cells.push_back(line.substr(start));
                break;
            }
            cells.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (cells.size() != 5) throw std::runtime_error("malformed csv row: '" + line + "'");
        SweepPoint p;
        p.k = util::parse_double(cells[0]);
        p.l = util::parse_double(cells[1]);
        p.a_rate = util::parse_double(cells[2]);
        p.sim = util::parse_double(cells[3]);
        p.ppl = util::parse_double(cells[4]);
        points.push_back(p);
    }
    return points;
}

} // namespace maskfill::eval
