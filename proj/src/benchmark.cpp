#include "epcd/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "epcd/baselines.hpp"
#include "epcd/detect.hpp"
#include "epcd/error.hpp"
#include "epcd/metrics.hpp"
#include "epcd/random.hpp"

namespace epcd {

std::string Method::name() const {
    switch (kind) {
        case MethodKind::EP: return "ep-" + std::string(criterion_name(criterion));
        case MethodKind::AEP: return "aep";
        case MethodKind::SCR: return "scr";
        case MethodKind::LES: return "les";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    if (name == "aep") return {MethodKind::AEP, Criterion::BM};
    if (name == "scr") return {MethodKind::SCR, Criterion::BM};
    if (name == "les") return {MethodKind::LES, Criterion::NG};
    if (name.starts_with("ep-")) return {MethodKind::EP, parse_criterion(name.substr(3))};
    throw Error("unknown method '" + std::string(name) + "' (expected ep-<criterion>, aep, scr or les)");
}

std::vector<Method> expand_methods(const std::vector<std::string>& methods, const std::vector<std::string>& criteria) {
    std::vector<Method> out;
    for (const auto& m : methods) {
        if (m == "ep") {
            if (criteria.empty()) throw Error("method 'ep' needs at least one criterion");
            for (const auto& c : criteria) out.push_back({MethodKind::EP, parse_criterion(c)});
        } else {
            out.push_back(parse_method(m));
        }
    }
    if (out.empty()) throw Error("no methods selected");
    return out;
}

MethodOutcome run_method(const Graph& graph, const Method& method, const MethodParams& params) {
    MethodOutcome out;
    switch (method.kind) {
        case MethodKind::EP: {
            DetectOptions options{params.epsilon, params.tol, params.seed};
            DetectionResult result = ep_detect(graph, method.criterion, options);
            out.labels = std::move(result.labels);
            out.candidates_evaluated = result.candidates_evaluated;
            out.objective_value = result.objective_value;
            break;
        }
        case MethodKind::AEP:
            out.labels = aep_detect(embedding(graph, params.epsilon, params.tol, params.seed));
            break;
        case MethodKind::SCR:
            out.labels = scr(graph, params.epsilon, params.restarts, params.tol, params.seed);
            break;
        case MethodKind::LES:
            out.labels = les(graph, params.epsilon, params.tol, params.seed);
            break;
    }
    return out;
}

std::string csv_header() {
    return "schema,method,criterion,n,n1,n2,w1,w2,r,lambda,gamma,epsilon,seed,rep,nmi,misclustered,wall_ms,"
           "candidates";
}

namespace {

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

std::string csv_row(const BenchmarkRow& row) {
    std::ostringstream s;
    s << kCsvSchema << ',' << row.method << ',' << row.criterion << ',' << row.n << ',' << row.n1 << ',' << row.n2
      << ',' << fmt(row.w1) << ',' << fmt(row.w2) << ',' << fmt(row.r) << ',' << fmt(row.lambda) << ','
      << fmt(row.gamma) << ',' << fmt(row.epsilon) << ',' << row.seed << ',' << row.rep << ',' << fmt(row.nmi) << ','
      << fmt(row.misclustered) << ',' << std::fixed << std::setprecision(3) << row.wall_ms << ',' << row.candidates;
    return s.str();
}

void write_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
    out << csv_header() << '\n';
    for (const auto& row : rows) out << csv_row(row) << '\n';
}

std::vector<BenchmarkRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != csv_header()) throw ParseError("unexpected benchmark CSV header", 1);
    std::vector<BenchmarkRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 18 || f[0] != kCsvSchema) throw ParseError("malformed benchmark row", lineno);
        try {
            BenchmarkRow r;
            r.method = f[1];
            r.criterion = f[2];
            r.n = std::stoul(f[3]);
            r.n1 = std::stoul(f[4]);
            r.n2 = std::stoul(f[5]);
            r.w1 = std::stod(f[6]);
            r.w2 = std::stod(f[7]);
            r.r = std::stod(f[8]);
            r.lambda = std::stod(f[9]);
            r.gamma = std::stod(f[10]);
            r.epsilon = std::stod(f[11]);
            r.seed = std::stoull(f[12]);
            r.rep = std::stoul(f[13]);
            r.nmi = std::stod(f[14]);
            r.misclustered = std::stod(f[15]);
            r.wall_ms = std::stod(f[16]);
            r.candidates = std::stoul(f[17]);
            rows.push_back(std::move(r));
        } catch (const std::exception&) {
            throw ParseError("malformed benchmark row", lineno);
        }
    }
    return rows;
}

std::vector<BenchmarkRow> run_simulation(const SimulationPlan& plan) {
    if (plan.methods.empty()) throw Error("simulation: no methods");
    if (plan.reps == 0) throw Error("simulation: reps must be positive");

    std::vector<SimConfig> grid;
    const std::vector<double> rs = plan.r_grid.empty() ? std::vector<double>{plan.config.r} : plan.r_grid;
    const std::vector<double> lambdas =
        plan.lambda_grid.empty() ? std::vector<double>{plan.config.lambda} : plan.lambda_grid;
    for (double lambda : lambdas) {
        for (double r : rs) {
            SimConfig c = plan.config;
            c.r = r;
            c.lambda = lambda;
            edge_prob_matrix(c);  // feasibility check up front
            grid.push_back(c);
        }
    }

    const std::size_t num_methods = plan.methods.size();
    const std::size_t tasks = grid.size() * plan.reps;
    std::vector<BenchmarkRow> rows(tasks * num_methods);

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        while (true) {
            const std::size_t task = next.fetch_add(1);
            if (task >= tasks) return;
            const std::size_t g = task / plan.reps;
            const std::size_t rep = task % plan.reps;
            try {
                SimConfig config = grid[g];
                config.seed = derive_seed(plan.seed, g * 1000003ULL + rep, 0);
                const SampledGraph sample = sample_dcsbm(config);
                for (std::size_t k = 0; k < num_methods; ++k) {
                    MethodParams params = plan.params;
                    params.seed = derive_seed(plan.seed, g * 1000003ULL + rep, 1);
                    const auto start = std::chrono::steady_clock::now();
                    const MethodOutcome outcome = run_method(sample.graph, plan.methods[k], params);
                    const auto stop = std::chrono::steady_clock::now();

                    BenchmarkRow& row = rows[task * num_methods + k];
                    row.method = plan.methods[k].name();
                    row.criterion = plan.methods[k].kind == MethodKind::EP
                                        ? std::string(criterion_name(plan.methods[k].criterion))
                                        : std::string("-");
                    row.n = config.n();
                    row.n1 = config.n1;
                    row.n2 = config.n2;
                    row.w1 = config.w1;
                    row.w2 = config.w2;
                    row.r = config.r;
                    row.lambda = config.lambda;
                    row.gamma = config.gamma;
                    row.epsilon = plan.params.epsilon;
                    row.seed = plan.seed;
                    row.rep = rep;
                    row.nmi = nmi(sample.truth, outcome.labels);
                    row.misclustered = misclustered_fraction(sample.truth, outcome.labels);
                    row.wall_ms =
                        plan.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
                    row.candidates = outcome.candidates_evaluated;
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks);
                return;
            }
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, std::min(plan.jobs, tasks));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<MethodSummary> summarize(const std::vector<BenchmarkRow>& rows) {
    std::vector<MethodSummary> out;
    std::vector<double> sum_sq;
    std::map<std::tuple<double, double, std::string>, std::size_t> index;
    for (const auto& row : rows) {
        const auto key = std::make_tuple(row.r, row.lambda, row.method);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, out.size()).first;
            out.push_back({row.method, row.r, row.lambda, 0, 0.0, 0.0, 0.0});
            sum_sq.push_back(0.0);
        }
        MethodSummary& s = out[it->second];
        ++s.count;
        s.mean_nmi += row.nmi;
        sum_sq[it->second] += row.nmi * row.nmi;
        s.mean_misclustered += row.misclustered;
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        auto& s = out[k];
        const auto c = static_cast<double>(s.count);
        s.mean_nmi /= c;
        s.mean_misclustered /= c;
        s.sd_nmi = s.count > 1 ? std::sqrt(std::max(0.0, (sum_sq[k] - c * s.mean_nmi * s.mean_nmi) / (c - 1.0))) : 0.0;
    }
    return out;
}

}  // namespace epcd
