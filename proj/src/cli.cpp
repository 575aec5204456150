/*
 * Copyright 2026 The idemcomm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "idemcomm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <type_traits>

#include <CLI11.hpp>

#include "idemcomm/matrix_io.hpp"
#include "idemcomm/rational.hpp"
#include "idemcomm/ring_witness.hpp"

namespace idemcomm::cli {

namespace {

std::string format(const Matrix& m) { return io::format_matrix(m); }
std::string format(const RationalMatrix& m) { return io::format_rational_matrix(m); }

template <class M>
M read_input(const std::filesystem::path& path);

template <>
Matrix read_input<Matrix>(const std::filesystem::path& path) {
    return io::read_matrix_file(path);
}

template <>
RationalMatrix read_input<RationalMatrix>(const std::filesystem::path& path) {
    return io::read_rational_matrix_file(path);
}

std::size_t dim_of(const Matrix& m) { return static_cast<std::size_t>(m.rows()); }
std::size_t dim_of(const RationalMatrix& m) { return m.dim(); }

template <class M>
void require_equal_dims(const std::vector<const M*>& ms) {
    for (const M* m : ms) {
        if (dim_of(*m) != dim_of(*ms.front())) {
            throw DimensionMismatch("input matrices have different dimensions (" +
                                    std::to_string(dim_of(*ms.front())) + " vs " +
                                    std::to_string(dim_of(*m)) + ")");
        }
    }
}

void print_check(std::ostream& out, const IdentityCheck& c) {
    out << "residual " << c.name << ' ' << io::format_double(c.residual) << ' '
        << (c.holds ? "ok" : "FAIL") << '\n';
}

/// Writes to the -o path when given, otherwise to out.
void emit(const CliConfig& cfg, std::ostream& out, const std::string& text) {
    if (!cfg.output) {
        out << text;
        return;
    }
    std::ofstream file(*cfg.output, std::ios::binary);
    if (!file) throw Error("cannot write '" + cfg.output->string() + "'");
    file << text;
    if (!file) throw Error("write to '" + cfg.output->string() + "' failed");
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::Constructed: return kSuccess;
        case Verdict::ObstructedNoSquareRoot:
        case Verdict::SingularUndecided: return kObstructed;
        case Verdict::IntertwinerMismatch: return kVerificationFailed;
        case Verdict::AnticommutationViolated: return kInputError;
    }
    return kInputError;
}

template <class M>
int ring_demo_impl(const CliConfig& cfg, std::ostream& out) {
    const M p = read_input<M>(cfg.inputs.at(0));
    const M q = read_input<M>(cfg.inputs.at(1));
    require_equal_dims<M>({&p, &q});
    const ToleranceConfig& tol = cfg.tolerances;
    bool ok = true;
    auto record = [&](const IdentityCheck& c) {
        print_check(out, c);
        ok = ok && c.holds;
    };

    out << "mode " << (cfg.rational ? "rational" : "float") << '\n';
    out << "== (i) idempotents p, q\n";
    const auto inv = idempotents_to_involutions(p, q, tol);
    out << "matrix t = pq - qp\n" << format(inv.t);

    out << "== (ii) involutions u = 2p - 1, v = 2q - 1\n";
    out << "matrix u\n" << format(inv.u) << "matrix v\n" << format(inv.v);
    record(check_involution(inv.u, "u", tol));
    record(check_involution(inv.v, "v", tol));
    const auto four_t = inv.t + inv.t + inv.t + inv.t;
    {
        const auto witness = involutions_to_sqrt_witness(inv.u, inv.v, tol);
        const auto chk = verify_witness(witness, tol);
        const M diff = inv.u * inv.v - inv.v * inv.u - four_t;
        IdentityCheck c;
        c.name = "uv-vu=4t";
        if constexpr (std::is_same_v<M, RationalMatrix>) {
            c.holds = diff.is_zero();
            c.residual = residual_norm(diff);
        } else {
            c.residual = diff.norm();
            c.holds = c.residual <= tol.eq_tol * std::max(1.0, inv.u.norm() * inv.v.norm());
        }
        record(c);

        out << "== (iii) witness s = (uv + vu)/4\n";
        out << "matrix s\n" << format(witness.s);
        for (const auto& check : chk.checks) record(check);

        out << "== (ii') v' = 2u(s + t)\n";
        const M v2 = witness_to_involution(witness, tol);
        out << "matrix v'\n" << format(v2);
        record(check_involution(v2, "v'", tol));

        out << "== (i') p' = (u + 1)/2, q' = (v' + 1)/2\n";
        const auto back = involutions_to_idempotents(inv.u, v2, tol);
        out << "matrix p'\n" << format(back.p) << "matrix q'\n" << format(back.q);
        record(check_idempotent(back.p, "p'", tol));
        record(check_idempotent(back.q, "q'", tol));
        const M tdiff = back.t - inv.t;
        IdentityCheck ct;
        ct.name = "p'q'-q'p'=t";
        if constexpr (std::is_same_v<M, RationalMatrix>) {
            ct.holds = tdiff.is_zero();
            ct.residual = residual_norm(tdiff);
        } else {
            ct.residual = tdiff.norm();
            ct.holds = ct.residual <= tol.eq_tol * std::max(1.0, back.p.norm() * back.q.norm());
        }
        record(ct);
    }
    out << "chain " << (ok ? "ok" : "FAIL") << '\n';
    return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

void CliConfig::validate() const {
    tolerances.validate();
    const std::size_t needed = command == Command::Factorize ? 2
                               : command == Command::Verify  ? 3
                               : command == Command::RingDemo ? 2
                                                             : 0;
    if (inputs.size() != needed) {
        throw Error("expected " + std::to_string(needed) + " input files, got " +
                    std::to_string(inputs.size()));
    }
    if (command == Command::ShiftSweep) {
        if (dims.empty()) throw Error("shift-sweep: --dims must list at least one dimension");
        if (mus.empty()) throw Error("shift-sweep: --mus must list at least one value");
        for (Index n : dims) {
            if (n < 2) throw Error("shift-sweep: every dimension must be at least 2");
        }
    }
}

std::string format_report(const FactorizationResult& result) {
    std::ostringstream ss;
    ss << "verdict " << to_string(result.verdict) << '\n';
    if (!result.note.empty()) ss << "note " << result.note << '\n';
    if (result.constructed()) ss << "branch_angle " << io::format_double(result.branch_angle) << '\n';
    for (const auto& [name, value] : result.residuals) {
        ss << "residual " << name << ' ' << io::format_double(value) << '\n';
    }
    if (result.p) ss << "matrix P\n" << io::format_matrix(*result.p);
    if (result.q) ss << "matrix Q\n" << io::format_matrix(*result.q);
    if (result.s) ss << "matrix S\n" << io::format_matrix(*result.s);
    return ss.str();
}

int run_factorize(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const Matrix t = io::read_matrix_file(cfg.inputs.at(0));
    const Matrix u = io::read_matrix_file(cfg.inputs.at(1));
    require_same_dim(t, u, "T and U");
    const auto result = factorize(t, u, cfg.tolerances);
    emit(cfg, out, format_report(result));
    if (!result.constructed()) err << "factorize: " << to_string(result.verdict) << ": " << result.note << '\n';
    return exit_code_for(result.verdict);
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const Matrix p = io::read_matrix_file(cfg.inputs.at(0));
    const Matrix q = io::read_matrix_file(cfg.inputs.at(1));
    const Matrix t = io::read_matrix_file(cfg.inputs.at(2));
    require_same_dim(p, q, "P and Q");
    require_same_dim(p, t, "P and T");
    const ToleranceConfig& tol = cfg.tolerances;

    std::vector<IdentityCheck> checks;
    checks.push_back(check_idempotent(p, "p", tol));
    checks.push_back(check_idempotent(q, "q", tol));
    IdentityCheck comm;
    comm.name = "pq-qp=t";
    comm.residual = norm_fro(p * q - q * p - t);
    comm.holds = comm.residual <= tol.eq_tol * std::max({1.0, norm_fro(p) * norm_fro(q), norm_fro(t)});
    checks.push_back(comm);

    std::ostringstream ss;
    bool ok = true;
    for (const auto& c : checks) {
        print_check(ss, c);
        ok = ok && c.holds;
    }
    ss << "verify " << (ok ? "ok" : "FAIL") << '\n';
    emit(cfg, out, ss.str());
    return ok ? kSuccess : kVerificationFailed;
}

int run_ring_demo(const CliConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    std::ostringstream ss;
    const int code = cfg.rational ? ring_demo_impl<RationalMatrix>(cfg, ss) : ring_demo_impl<Matrix>(cfg, ss);
    emit(cfg, out, ss.str());
    return code;
}

int run_shift_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto records = shift_lab::mu_sweep(cfg.dims, cfg.mus, cfg.direction, cfg.tolerances);

    std::ostringstream csv;
    shift_lab::write_sweep_csv(csv, records);

    std::ostringstream summary;
    summary << shift_lab::sweep_report_header(cfg.direction);
    for (const auto& g : shift_lab::growth_ratios(records)) {
        summary << "summary mu=" << io::format_complex(g.mu) << " max_ratio=" << io::format_double(g.max_ratio)
                << " last_ratio=" << io::format_double(g.last_ratio) << '\n';
    }
    for (const auto& r : records) {
        if (!r.error.empty()) {
            summary << "# cell n=" << r.n << " mu=" << io::format_complex(r.mu) << " failed: " << r.error
                    << '\n';
        }
    }

    if (cfg.output) {
        emit(cfg, out, csv.str());
        out << summary.str();
    } else {
        out << csv.str();
        err << summary.str();
    }
    if (cfg.plot) {
        std::ofstream plot(*cfg.plot, std::ios::binary);
        if (!plot) throw Error("cannot write '" + cfg.plot->string() + "'");
        plot << shift_lab::gnuplot_script(cfg.output ? cfg.output->string() : "sweep.csv", records);
    }
    return kSuccess;
}

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        cfg.validate();
        switch (cfg.command) {
            case Command::Factorize: return run_factorize(cfg, out, err);
            case Command::Verify: return run_verify(cfg, out, err);
            case Command::RingDemo: return run_ring_demo(cfg, out, err);
            case Command::ShiftSweep: return run_shift_sweep(cfg, out, err);
        }
    } catch (const NotIdempotent& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const NotInvolution& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const WitnessInvalid& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Commutators of idempotents: construct, verify and obstruct [P, Q] = T"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string t_path, u_path, p_path, q_path;
    std::string output, plot;
    std::string dims_text, mus_text;
    double eq_tol = cfg.tolerances.eq_tol;
    double rank_tol = cfg.tolerances.rank_tol;
    bool backward = false;

    auto add_tolerances = [&](CLI::App* sub) {
        sub->add_option("--tol", eq_tol, "Relative tolerance for identity checks")->capture_default_str();
        sub->add_option("--rank-tol", rank_tol, "Relative singular-value threshold")->capture_default_str();
        sub->add_option("-o,--output", output, "Output file (default: stdout)");
    };

    auto* fac = app.add_subcommand("factorize", "Find an idempotent Q with [(U+I)/2, Q] = T");
    fac->add_option("T", t_path, "Matrix file for T")->required();
    fac->add_option("U", u_path, "Matrix file for the involution U")->required();
    add_tolerances(fac);

    std::string vt_path;
    auto* ver = app.add_subcommand("verify", "Check P^2 = P, Q^2 = Q and PQ - QP = T");
    ver->add_option("P", p_path, "Matrix file for P")->required();
    ver->add_option("Q", q_path, "Matrix file for Q")->required();
    ver->add_option("T", vt_path, "Matrix file for T")->required();
    add_tolerances(ver);

    std::string rp_path, rq_path;
    auto* ring = app.add_subcommand("ring-demo", "Walk the idempotent / involution / square-root chain");
    ring->add_option("P", rp_path, "Matrix file for the idempotent P")->required();
    ring->add_option("Q", rq_path, "Matrix file for the idempotent Q")->required();
    ring->add_flag("--rational", cfg.rational, "Exact rational arithmetic");
    add_tolerances(ring);

    auto* sweep = app.add_subcommand("shift-sweep", "Factorize mu * (truncated shift) over a grid");
    sweep->add_option("--dims", dims_text, "Comma-separated dimensions, e.g. 8,16,32")->required();
    sweep->add_option("--mus", mus_text, "Comma-separated complex mu values, e.g. 0.45,0.5,0.6")->required();
    sweep->add_flag("--backward", backward, "Use the backward shift");
    sweep->add_option("--plot", plot, "Also write a gnuplot script here");
    add_tolerances(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        cfg.tolerances.eq_tol = eq_tol;
        cfg.tolerances.rank_tol = rank_tol;
        if (!output.empty()) cfg.output = output;
        if (!plot.empty()) cfg.plot = plot;
        if (fac->parsed()) {
            cfg.command = Command::Factorize;
            cfg.inputs = {t_path, u_path};
        } else if (ver->parsed()) {
            cfg.command = Command::Verify;
            cfg.inputs = {p_path, q_path, vt_path};
        } else if (ring->parsed()) {
            cfg.command = Command::RingDemo;
            cfg.inputs = {rp_path, rq_path};
        } else {
            cfg.command = Command::ShiftSweep;
            cfg.direction = backward ? shift_lab::ShiftDirection::Backward : shift_lab::ShiftDirection::Forward;
            for (const auto& item : CLI::detail::split(dims_text, ',')) {
                const auto trimmed = CLI::detail::trim_copy(item);
                if (trimmed.empty()) continue;
                std::size_t used = 0;
                const long n = std::stol(trimmed, &used);
                if (used != trimmed.size()) throw Error("bad dimension '" + trimmed + "'");
                cfg.dims.push_back(n);
            }
            for (const auto& item : CLI::detail::split(mus_text, ',')) {
                const auto trimmed = CLI::detail::trim_copy(item);
                if (trimmed.empty()) continue;
                cfg.mus.push_back(io::parse_complex(trimmed));
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return dispatch(cfg, out, err);
}

}  // namespace idemcomm::cli
