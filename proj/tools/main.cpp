// Copyright 2026 The quditsort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library exclusively through the
// public C interface in quditsort.h.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quditsort.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitUsage);
}

// Fails the command as a usage error when a library call rejects the input.
void check(qds_status status, const std::string& context) {
    if (status != QDS_OK) {
        die_usage(context + ": " + qds_status_string(status) + " (" +
                  qds_last_error() + ")");
    }
}

struct MatrixHandle {
    qds_matrix* m = nullptr;
    ~MatrixHandle() { qds_matrix_free(m); }
};

struct SimHandle {
    qds_sim* s = nullptr;
    ~SimHandle() { qds_sim_free(s); }
};

struct ReportHandle {
    qds_report* r = nullptr;
    ~ReportHandle() { qds_report_free(r); }
};

struct MappingHandle {
    qds_mapping* m = nullptr;
    ~MappingHandle() { qds_mapping_free(m); }
};

struct VerificationHandle {
    qds_verification* v = nullptr;
    ~VerificationHandle() { qds_verification_free(v); }
};

struct LayoutHandle {
    qds_layout* l = nullptr;
    ~LayoutHandle() { qds_layout_free(l); }
};

// Reports are serialized with 12 significant digits.
double round_significant(double value) {
    if (!std::isfinite(value)) return value;
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return std::strtod(buffer, nullptr);
}

// Prism angles are reported with 8 decimal digits.
double round_angle(double value) {
    return std::round(value * 1e8) / 1e8;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) die_usage("cannot open output file '" + output_path + "'");
    out << text;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) die_usage("cannot open config file '" + path + "'");
    json config;
    try {
        in >> config;
    } catch (const json::parse_error& e) {
        die_usage("invalid JSON in '" + path + "': " + e.what());
    }
    return config;
}

qds_matrix* build_sorter(const std::string& name, int dim) {
    qds_matrix* sorter = nullptr;
    if (name == "sqs") {
        check(qds_build_sqs(dim, &sorter), "building sqs");
    } else if (name == "mqs") {
        check(qds_build_mqs(dim, &sorter), "building mqs");
    } else if (name == "photonic4") {
        if (dim != 4) die_usage("sorter 'photonic4' requires dimension 4");
        check(qds_build_photonic_sorter(4, &sorter), "building photonic4");
    } else if (name == "polarization") {
        if (dim != 2) die_usage("sorter 'polarization' requires dimension 2");
        check(qds_build_polarization_sorter(&sorter), "building polarization");
    } else {
        die_usage("unknown sorter '" + name +
                  "' (expected sqs, mqs, photonic4, or polarization)");
    }
    return sorter;
}

struct SimConfig {
    int dimension = 0;
    std::string sorter;
    int particle_count = 0;
    long long shots = 0;
    std::uint64_t seed = 0;
    bool has_shots = false;
    bool has_seed = false;
};

SimConfig load_simulation(const json& config, SimHandle& sim) {
    SimConfig parsed;
    if (!config.contains("dimension") ||
        !config["dimension"].is_number_integer()) {
        die_usage("config needs an integer \"dimension\"");
    }
    parsed.dimension = config["dimension"].get<int>();
    if (parsed.dimension < 2) die_usage("\"dimension\" must be at least 2");
    if (!config.contains("sorter") || !config["sorter"].is_string()) {
        die_usage("config needs a string \"sorter\"");
    }
    parsed.sorter = config["sorter"].get<std::string>();

    MatrixHandle sorter;
    sorter.m = build_sorter(parsed.sorter, parsed.dimension);
    check(qds_sim_create(parsed.dimension, sorter.m, &sim.s),
          "creating simulation");

    if (!config.contains("particles") || !config["particles"].is_array() ||
        config["particles"].empty()) {
        die_usage("config needs a non-empty \"particles\" array");
    }
    for (const json& p : config["particles"]) {
        if (!p.contains("port") || !p["port"].is_number_integer()) {
            die_usage("every particle needs an integer \"port\"");
        }
        const int port = p["port"].get<int>();
        if (!p.contains("state")) {
            die_usage("every particle needs a \"state\"");
        }
        const json& state = p["state"];
        if (state.is_number_integer()) {
            check(qds_sim_add_basis_particle(sim.s, state.get<int>(), port),
                  "adding particle");
        } else if (state.is_object() && state.contains("amplitudes") &&
                   state["amplitudes"].is_array()) {
            std::vector<double> re_im;
            for (const json& pair : state["amplitudes"]) {
                if (!pair.is_array() || pair.size() != 2) {
                    die_usage("amplitudes must be [re, im] pairs");
                }
                re_im.push_back(pair[0].get<double>());
                re_im.push_back(pair[1].get<double>());
            }
            check(qds_sim_add_particle(sim.s, re_im.data(), re_im.size(), port),
                  "adding particle");
        } else {
            die_usage("particle \"state\" must be an integer or an object "
                      "with \"amplitudes\"");
        }
    }
    parsed.particle_count = qds_sim_particle_count(sim.s);

    if (config.contains("shots")) {
        if (!config["shots"].is_number_integer()) {
            die_usage("\"shots\" must be an integer");
        }
        parsed.shots = config["shots"].get<long long>();
        parsed.has_shots = true;
    }
    if (config.contains("seed")) {
        if (!config["seed"].is_number_integer()) {
            die_usage("\"seed\" must be an integer");
        }
        parsed.seed = config["seed"].get<std::uint64_t>();
        parsed.has_seed = true;
    }
    return parsed;
}

void append_histogram(json& report, const std::vector<long long>& counts,
                      long long shots_per_particle, long long total,
                      const std::vector<double>& inferred) {
    report["counts"] = counts;
    report["shots_per_particle"] = shots_per_particle;
    report["total"] = total;
    json inferred_json = json::array();
    for (double v : inferred) inferred_json.push_back(round_significant(v));
    report["inferred_inputs"] = inferred_json;
}

std::string histogram_csv(const std::vector<long long>& counts,
                          const std::vector<double>& inferred) {
    std::string csv = "port,count,inferred_input\n";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        char line[96];
        std::snprintf(line, sizeof(line), "%zu,%lld,%.12g\n", i, counts[i],
                      inferred[i]);
        csv += line;
    }
    return csv;
}

std::vector<double> inferred_inputs(const std::vector<long long>& counts,
                                    int dim, long long shots_per_particle) {
    std::vector<double> inferred(static_cast<std::size_t>(dim), 0.0);
    check(qds_infer_input_histogram(counts.data(), dim, shots_per_particle,
                                    inferred.data()),
          "inferring inputs");
    return inferred;
}

int cmd_sort(const std::string& config_path, const std::string& output_path,
             const std::string& format) {
    const json config = load_json_file(config_path);
    SimHandle sim;
    const SimConfig parsed = load_simulation(config, sim);

    std::vector<int> ports(static_cast<std::size_t>(parsed.particle_count), 0);
    std::vector<int> states(static_cast<std::size_t>(parsed.particle_count), 0);
    check(qds_sim_sort_deterministic(sim.s, ports.data(), states.data()),
          "sorting");

    std::vector<long long> counts(static_cast<std::size_t>(parsed.dimension),
                                  0);
    for (int port : ports) ++counts[static_cast<std::size_t>(port)];
    const std::vector<double> inferred =
        inferred_inputs(counts, parsed.dimension, 1);

    if (format == "csv") {
        emit(histogram_csv(counts, inferred), output_path);
        return 0;
    }

    json report;
    report["schema_version"] = "1";
    report["command"] = "sort";
    report["dimension"] = parsed.dimension;
    report["sorter"] = parsed.sorter;
    json records = json::array();
    for (int i = 0; i < parsed.particle_count; ++i) {
        json record;
        record["particle_index"] = i;
        record["output_port"] = ports[static_cast<std::size_t>(i)];
        record["output_system_state"] = states[static_cast<std::size_t>(i)];
        records.push_back(record);
    }
    report["records"] = records;
    append_histogram(report, counts, 1, parsed.particle_count, inferred);
    emit(report.dump(2) + "\n", output_path);
    return 0;
}

int cmd_sample(const std::string& config_path, const std::string& output_path,
               const std::string& format) {
    const json config = load_json_file(config_path);
    SimHandle sim;
    const SimConfig parsed = load_simulation(config, sim);
    if (!parsed.has_shots || parsed.shots < 1) {
        die_usage("sample needs \"shots\" >= 1 in the config");
    }
    if (!parsed.has_seed) {
        die_usage("sample needs a \"seed\" in the config; sampling must be "
                  "reproducible");
    }

    std::vector<long long> counts(static_cast<std::size_t>(parsed.dimension),
                                  0);
    check(qds_sim_sample(sim.s, parsed.shots, parsed.seed, counts.data()),
          "sampling");
    const std::vector<double> inferred =
        inferred_inputs(counts, parsed.dimension, parsed.shots);

    if (format == "csv") {
        emit(histogram_csv(counts, inferred), output_path);
        return 0;
    }

    json report;
    report["schema_version"] = "1";
    report["command"] = "sample";
    report["dimension"] = parsed.dimension;
    report["sorter"] = parsed.sorter;
    report["shots"] = parsed.shots;
    report["seed"] = parsed.seed;
    append_histogram(report, counts, parsed.shots,
                     static_cast<long long>(parsed.particle_count) *
                         parsed.shots,
                     inferred);
    emit(report.dump(2) + "\n", output_path);
    return 0;
}

int cmd_verify(int dmin, int dmax, double tol, const std::string& format,
               const std::string& output_path) {
    if (dmin < 2 || dmin > dmax || dmax > 16) {
        die_usage("verification range must satisfy 2 <= dmin <= dmax <= 16");
    }
    if (tol < 1e-12 || tol > 1e-6) {
        die_usage("tolerance must lie in [1e-12, 1e-6]");
    }
    VerificationHandle verification;
    check(qds_verification_run(dmin, dmax, tol, &verification.v), "verify");
    const int count = qds_verification_count(verification.v);
    const bool all_passed = qds_verification_all_passed(verification.v) != 0;

    if (format == "json") {
        json report;
        report["schema_version"] = "1";
        report["command"] = "verify";
        report["dmin"] = dmin;
        report["dmax"] = dmax;
        report["tolerance"] = tol;
        json checks = json::array();
        for (int i = 0; i < count; ++i) {
            json c;
            c["name"] = qds_verification_name(verification.v, i);
            c["dimension"] = qds_verification_dim(verification.v, i);
            c["passed"] = qds_verification_passed(verification.v, i) != 0;
            c["residual"] =
                round_significant(qds_verification_residual(verification.v, i));
            checks.push_back(c);
        }
        report["checks"] = checks;
        report["all_passed"] = all_passed;
        emit(report.dump(2) + "\n", output_path);
    } else {
        std::ostringstream out;
        int passed = 0;
        std::string first_failure;
        for (int i = 0; i < count; ++i) {
            const bool ok = qds_verification_passed(verification.v, i) != 0;
            if (ok) {
                ++passed;
            } else if (first_failure.empty()) {
                first_failure = qds_verification_name(verification.v, i);
            }
            char line[160];
            std::snprintf(line, sizeof(line), "%-28s D=%-3d %s  %.3e\n",
                          qds_verification_name(verification.v, i),
                          qds_verification_dim(verification.v, i),
                          ok ? "PASS" : "FAIL",
                          qds_verification_residual(verification.v, i));
            out << line;
        }
        out << "summary: " << passed << "/" << count << " checks passed (D in ["
            << dmin << ", " << dmax << "], tol " << tol << ")\n";
        if (!all_passed) {
            out << "first failing check: " << first_failure << "\n";
        }
        emit(out.str(), output_path);
    }
    return all_passed ? 0 : kExitCheckFailure;
}

int cmd_classify(const std::string& mapping_path,
                 const std::string& output_path) {
    const json config = load_json_file(mapping_path);
    if (!config.contains("dimension") ||
        !config["dimension"].is_number_integer()) {
        die_usage("mapping needs an integer \"dimension\"");
    }
    const int dim = config["dimension"].get<int>();
    if (!config.contains("map") || !config["map"].is_array()) {
        die_usage("mapping needs a \"map\" array");
    }

    MappingHandle mapping;
    check(qds_mapping_create(dim, &mapping.m), "creating mapping");
    for (const json& entry : config["map"]) {
        if (!entry.contains("s") || !entry.contains("k") ||
            !entry.contains("out") || !entry["out"].is_array()) {
            die_usage("every map entry needs \"s\", \"k\", and \"out\"");
        }
        std::vector<double> re_im;
        for (const json& pair : entry["out"]) {
            if (!pair.is_array() || pair.size() != 2) {
                die_usage("\"out\" must hold [re, im] pairs");
            }
            re_im.push_back(pair[0].get<double>());
            re_im.push_back(pair[1].get<double>());
        }
        check(qds_mapping_set_image(mapping.m, entry["s"].get<int>(),
                                    entry["k"].get<int>(), re_im.data(),
                                    re_im.size()),
              "setting mapping image");
    }

    ReportHandle report;
    check(qds_classify(mapping.m, &report.r), "classifying");

    json out;
    out["schema_version"] = "1";
    out["command"] = "classify";
    out["dimension"] = dim;
    out["classification"] =
        qds_sorter_class_string(qds_report_classification(report.r));
    out["is_unitary"] = qds_report_is_unitary(report.r) != 0;
    const int n_ports = qds_report_sorting_ports(report.r, nullptr, 0);
    std::vector<int> ports(static_cast<std::size_t>(n_ports), 0);
    qds_report_sorting_ports(report.r, ports.data(), ports.size());
    out["sorting_ports"] = ports;
    if (qds_report_has_witness(report.r) != 0) {
        int s1 = 0, k1 = 0, s2 = 0, k2 = 0;
        double overlap = 0.0;
        check(qds_report_witness(report.r, &s1, &k1, &s2, &k2, &overlap),
              "reading witness");
        json w;
        w["first"] = json{{"state", s1}, {"port", k1}};
        w["second"] = json{{"state", s2}, {"port", k2}};
        w["overlap"] = round_significant(overlap);
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    emit(out.dump(2) + "\n", output_path);
    return 0;
}

int cmd_decompose(int dim, double tol, const std::string& output_path) {
    if (tol < 1e-12 || tol > 1e-6) {
        die_usage("tolerance must lie in [1e-12, 1e-6]");
    }
    MatrixHandle x, z, f, f_dag, eye, cx, cz, fcz, inner, rebuilt;
    check(qds_pauli_x(dim, 1, &x.m), "decompose");
    check(qds_pauli_z(dim, 1, &z.m), "decompose");
    check(qds_fourier(dim, &f.m), "decompose");
    check(qds_fourier_inverse(dim, &f_dag.m), "decompose");
    check(qds_pauli_x(dim, 0, &eye.m), "decompose");
    check(qds_controlled(x.m, dim, &cx.m), "decompose");
    check(qds_controlled(z.m, dim, &cz.m), "decompose");

    // (I (x) F^dagger) C(Z) (I (x) F)
    MatrixHandle if_, ifd;
    check(qds_matrix_tensor(eye.m, f.m, &if_.m), "decompose");
    check(qds_matrix_tensor(eye.m, f_dag.m, &ifd.m), "decompose");
    check(qds_matrix_multiply(cz.m, if_.m, &inner.m), "decompose");
    check(qds_matrix_multiply(ifd.m, inner.m, &fcz.m), "decompose");
    double fourier_residual = 0.0;
    check(qds_matrix_max_abs_diff(cx.m, fcz.m, &fourier_residual),
          "decompose");

    MatrixHandle sqs, pcxd, mqs, via;
    check(qds_build_sqs(dim, &sqs.m), "decompose");
    check(qds_port_controlled_x_dagger(dim, &pcxd.m), "decompose");
    check(qds_build_mqs(dim, &mqs.m), "decompose");
    check(qds_matrix_multiply(sqs.m, pcxd.m, &via.m), "decompose");
    double factorization_residual = 0.0;
    check(qds_matrix_max_abs_diff(via.m, mqs.m, &factorization_residual),
          "decompose");

    const bool passed =
        fourier_residual < tol && factorization_residual < tol;
    json out;
    out["schema_version"] = "1";
    out["command"] = "decompose";
    out["dimension"] = dim;
    out["tolerance"] = tol;
    out["sqs_fourier_decomposition_residual"] =
        round_significant(fourier_residual);
    out["mqs_factorization_residual"] =
        round_significant(factorization_residual);
    out["passed"] = passed;
    emit(out.dump(2) + "\n", output_path);
    return passed ? 0 : kExitCheckFailure;
}

int cmd_describe(const std::string& target, const std::string& output_path) {
    if (target != "photonic4") {
        die_usage("unknown describe target '" + target +
                  "' (expected photonic4)");
    }
    LayoutHandle layout;
    check(qds_layout_create(4, &layout.l), "describe");

    json out;
    out["schema_version"] = "1";
    out["command"] = "describe";
    out["target"] = target;
    out["dimension"] = qds_layout_dim(layout.l);
    json elements = json::array();
    const int count = qds_layout_element_count(layout.l);
    for (int i = 0; i < count; ++i) {
        json e;
        const std::string kind = qds_layout_element_kind(layout.l, i);
        e["kind"] = kind;
        const int path = qds_layout_element_path(layout.l, i);
        if (path >= 0) {
            e["path"] = path;
        } else {
            e["path"] = nullptr;
        }
        if (kind == "dove_prism") {
            e["angle"] = round_angle(qds_layout_element_angle(layout.l, i));
        } else {
            e["label"] = qds_layout_element_label(layout.l, i);
        }
        elements.push_back(e);
    }
    out["elements"] = elements;
    emit(out.dump(2) + "\n", output_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quditsort: build, verify, and simulate quDit sorters"};
    app.require_subcommand(1);

    // verify
    int dmin = 2;
    int dmax = 8;
    double tol = 1e-10;
    std::string verify_format = "text";
    std::string verify_output;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the invariant suite over a dimension range");
    verify->add_option("--dmin", dmin, "smallest dimension (>= 2)");
    verify->add_option("--dmax", dmax, "largest dimension (<= 16)");
    verify->add_option("--tol", tol, "tolerance, in [1e-12, 1e-6]");
    verify->add_option("--format", verify_format, "text or json");
    verify->add_option("--output", verify_output, "write the report here");

    // sort
    std::string sort_config, sort_output, sort_format = "json";
    CLI::App* sort_cmd = app.add_subcommand(
        "sort", "deterministically sort basis-state particles");
    sort_cmd->add_option("--config", sort_config, "JSON config file")
        ->required();
    sort_cmd->add_option("--output", sort_output, "write the report here");
    sort_cmd->add_option("--format", sort_format, "json or csv");

    // sample
    std::string sample_config, sample_output, sample_format = "json";
    CLI::App* sample_cmd = app.add_subcommand(
        "sample", "sample detector clicks with Born probabilities");
    sample_cmd->add_option("--config", sample_config, "JSON config file")
        ->required();
    sample_cmd->add_option("--output", sample_output, "write the report here");
    sample_cmd->add_option("--format", sample_format, "json or csv");

    // classify
    std::string mapping_path, classify_output;
    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "classify a candidate basis-image mapping");
    classify_cmd->add_option("--mapping", mapping_path, "mapping JSON file")
        ->required();
    classify_cmd->add_option("--output", classify_output,
                             "write the report here");

    // decompose
    int decompose_dim = 0;
    double decompose_tol = 1e-10;
    std::string decompose_output;
    CLI::App* decompose_cmd = app.add_subcommand(
        "decompose", "report the sorter decomposition residuals");
    decompose_cmd
        ->add_option("--dimension", decompose_dim, "quDit dimension (>= 2)")
        ->required();
    decompose_cmd->add_option("--tol", decompose_tol,
                              "tolerance, in [1e-12, 1e-6]");
    decompose_cmd->add_option("--output", decompose_output,
                              "write the report here");

    // describe
    std::string describe_target, describe_output;
    CLI::App* describe_cmd = app.add_subcommand(
        "describe", "print an optical layout description");
    describe_cmd->add_option("target", describe_target, "layout name")
        ->required();
    describe_cmd->add_option("--output", describe_output,
                             "write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (verify->parsed()) {
        if (verify_format != "text" && verify_format != "json") {
            die_usage("verify --format must be text or json");
        }
        return cmd_verify(dmin, dmax, tol, verify_format, verify_output);
    }
    if (sort_cmd->parsed()) {
        if (sort_format != "json" && sort_format != "csv") {
            die_usage("sort --format must be json or csv");
        }
        return cmd_sort(sort_config, sort_output, sort_format);
    }
    if (sample_cmd->parsed()) {
        if (sample_format != "json" && sample_format != "csv") {
            die_usage("sample --format must be json or csv");
        }
        return cmd_sample(sample_config, sample_output, sample_format);
    }
    if (classify_cmd->parsed()) {
        return cmd_classify(mapping_path, classify_output);
    }
    if (decompose_cmd->parsed()) {
        return cmd_decompose(decompose_dim, decompose_tol, decompose_output);
    }
    if (describe_cmd->parsed()) {
        return cmd_describe(describe_target, describe_output);
    }
    return kExitUsage;
}
