#include "qsa/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qsa::experiments {

using model::ModelParams;

Matrix2 named_state(const std::string& name) {
  if (name == "g") return ops::projector(ops::ket_ground());
  if (name == "e") return ops::projector(ops::ket_excited());
  if (name == "plus") return ops::projector(ops::ket_plus());
  if (name == "minus") return ops::projector(ops::ket_minus());
  if (name == "mixed") return 0.5 * Matrix2::Identity();
  if (name.rfind("bloch:", 0) == 0) {
    double x, y, z;
    if (std::sscanf(name.c_str() + 6, "%lf,%lf,%lf", &x, &y, &z) != 3)
      throw std::invalid_argument("named_state: expected bloch:x,y,z");
    if (x * x + y * y + z * z > 1.0 + 1e-12)
      throw std::invalid_argument("named_state: Bloch vector outside the ball");
    Matrix2 rho = 0.5 * (Matrix2::Identity() + x * ops::pauli_x() +
                         y * ops::pauli_y() + z * ops::pauli_z());
    return rho;
  }
  throw std::invalid_argument("named_state: unknown state '" + name + "'");
}

std::string orthogonal_partner(const std::string& state) {
  if (state == "g") return "e";
  if (state == "e") return "g";
  if (state == "plus") return "minus";
  if (state == "minus") return "plus";
  return "mixed";
}

RunConfig preset_config(const std::string& name) {
  RunConfig cfg;
  cfg.preset = name;
  if (name == "fig1") {
    cfg.params = {1.0, 1.0, 1.0, 1.0, 0.0, 10.0, 1.0};
    cfg.sweeps = {{"omega-a", 0.5, 2.0, 41}, {"jx", 0.0, 2.0, 41}};
    return cfg;
  }
  // trajectory presets share the oscillatory rate reading gamma = 10*Gamma = 1
  cfg.params = {1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.1};
  cfg.t_max = 40.0;
  cfg.steps = 0;  // ramp grid
  if (name == "fig2a") {
    cfg.state_s = "g";
    cfg.state_s2 = "e";
    cfg.state_a = "plus";
  } else if (name == "fig2b") {
    cfg.state_s = "plus";
    cfg.state_s2 = "minus";
    cfg.state_a = "plus";
  } else if (name == "fig3" || name == "fig4") {
    cfg.state_s = "e";
    cfg.state_s2 = "g";
    cfg.state_a = "plus";
  } else {
    throw std::invalid_argument("preset_config: unknown preset '" + name + "'");
  }
  return cfg;
}

namespace {

void apply_axis(ModelParams& p, const std::string& name, double v) {
  if (name == "omega-s") p.omega_s = v;
  else if (name == "omega-a") p.omega_a = v;
  else if (name == "jx") p.jx = v;
  else if (name == "jy") p.jy = v;
  else if (name == "jz") p.jz = v;
  else if (name == "gamma") p.gamma = v;
  else if (name == "Gamma") p.big_gamma = v;
  else throw std::invalid_argument("sweep: unknown parameter '" + name + "'");
}

double axis_value(const SweepAxis& ax, int i) {
  if (ax.n <= 1) return ax.min;
  return ax.min + (ax.max - ax.min) * static_cast<double>(i) / (ax.n - 1);
}

}  // namespace

std::vector<SweepRow> steady_sweep(const RunConfig& cfg) {
  if (cfg.sweeps.empty() || cfg.sweeps.size() > 2)
    throw std::invalid_argument("steady_sweep: need one or two sweep axes");
  for (const SweepAxis& ax : cfg.sweeps) {
    ModelParams scratch = cfg.params;
    apply_axis(scratch, ax.param, ax.min);  // rejects unknown parameter names
  }
  const SweepAxis ax0 = cfg.sweeps[0];
  const SweepAxis ax1 =
      cfg.sweeps.size() == 2 ? cfg.sweeps[1] : SweepAxis{"", 0.0, 0.0, 1};

  std::vector<SweepRow> rows(static_cast<std::size_t>(ax0.n) * ax1.n);
  std::atomic<std::size_t> next{0};
  const unsigned n_threads = cfg.threads > 0
                                 ? static_cast<unsigned>(cfg.threads)
                                 : std::max(1u, std::thread::hardware_concurrency());

  auto worker = [&]() {
    for (std::size_t idx = next.fetch_add(1); idx < rows.size();
         idx = next.fetch_add(1)) {
      const int i = static_cast<int>(idx) / ax1.n;
      const int j = static_cast<int>(idx) % ax1.n;
      SweepRow& row = rows[idx];
      row.i = i;
      row.j = j;
      row.axis0 = axis_value(ax0, i);
      row.axis1 = axis_value(ax1, j);
      try {
        ModelParams p = cfg.params;
        apply_axis(p, ax0.param, row.axis0);
        if (!ax1.param.empty()) apply_axis(p, ax1.param, row.axis1);
        const dynamics::SteadyState ss = dynamics::steady_state(p);
        row.null_dim = ss.null_dim;
        row.residual = ss.residual;
        row.corr = correlations::correlation_record(ss.state, p.omega_s,
                                                    p.omega_a);
      } catch (const std::exception&) {
        row.failed = true;  // recorded per-row, run continues
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return rows;
}

TrajectoryResult trajectory_run(const RunConfig& cfg) {
  cfg.params.validate();
  const Matrix2 rho_s = named_state(cfg.state_s);
  const std::string partner =
      cfg.state_s2.empty() ? orthogonal_partner(cfg.state_s) : cfg.state_s2;
  const Matrix2 rho_s2 = named_state(partner);
  const Matrix2 rho_a = named_state(cfg.state_a);

  const std::vector<double> grid =
      cfg.steps > 0 ? dynamics::uniform_grid(cfg.t_max, cfg.steps)
                    : dynamics::ramp_grid(cfg.t_max);

  TrajectoryResult out;
  out.times = grid;
  out.distances =
      nonmarkov::distance_trajectory(cfg.params, rho_s, rho_s2, rho_a, grid);

  const dynamics::Trajectory traj =
      dynamics::evolve(cfg.params, ops::kron(rho_s, rho_a), grid);
  const dynamics::SteadyState ss = dynamics::steady_state(cfg.params);

  // Thermodynamic reference for <Sigma>: the bath Gibbs state whenever the
  // reduced steady state thermalizes (jx == jy), otherwise the steady-state
  // marginal (Spohn-style reference, not a thermodynamic one).
  Matrix2 ref_s;
  if (std::abs(cfg.params.jx - cfg.params.jy) <= 1e-12) {
    ref_s = model::gibbs_state(cfg.params.omega_s * ops::pauli_z(),
                               model::bath_beta(cfg.params));
  } else {
    ref_s = ops::partial_trace(ss.state, ops::Subsystem::System);
  }
  out.rates = thermo::thermo_trajectory(cfg.params, traj, ss.state, ref_s);

  out.mi.resize(grid.size());
  out.eof.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.mi[i] = correlations::mutual_information(traj.states[i]);
    out.eof[i] = correlations::eof(traj.states[i]);
  }
  return out;
}

// ------------------------------- output -------------------------------------

namespace {
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt(*v) : "undefined";
}
}  // namespace

void write_sweep_csv(const std::string& path, const RunConfig& cfg,
                     const std::vector<SweepRow>& rows) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  const std::string a0 = cfg.sweeps[0].param;
  const std::string a1 = cfg.sweeps.size() == 2 ? cfg.sweeps[1].param : "unused";
  const double ln2 = std::numbers::ln2_v<double>;
  os << "i,j," << a0 << "," << a1
     << ",concurrence,eof,mutual_info,beta_eff_s,beta_eff_a,null_dim,residual,"
        "status\n";
  for (const SweepRow& r : rows) {
    const double mi =
        cfg.log_base == 2 ? r.corr.mutual_info / ln2 : r.corr.mutual_info;
    os << r.i << ',' << r.j << ',' << fmt(r.axis0) << ',' << fmt(r.axis1)
       << ',' << fmt(r.corr.concurrence) << ',' << fmt(r.corr.eof) << ','
       << fmt(mi) << ',' << fmt_opt(r.corr.beta_eff_s) << ','
       << fmt_opt(r.corr.beta_eff_a) << ',' << r.null_dim << ','
       << fmt(r.residual) << ',' << (r.failed ? "failed" : "ok") << '\n';
  }
}

void write_trajectory_csv(const std::string& path, const RunConfig& cfg,
                          const TrajectoryResult& r) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  const double ln2 = std::numbers::ln2_v<double>;
  os << "t,d_sa,d_s,mi,eof,sigma_sa,sigma_s,sigma_a,mi_rate,"
        "entropy_production,heat_s,decomp_residual\n";
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    const double mi = cfg.log_base == 2 ? r.mi[i] / ln2 : r.mi[i];
    os << fmt(r.times[i]) << ',' << fmt(r.distances.d_sa[i]) << ','
       << fmt(r.distances.d_s[i]) << ',' << fmt(mi) << ',' << fmt(r.eof[i])
       << ',' << fmt(r.rates.sigma_sa[i]) << ',' << fmt(r.rates.sigma_s[i])
       << ',' << fmt(r.rates.sigma_a[i]) << ',' << fmt(r.rates.mi_rate[i])
       << ',' << fmt(r.rates.entropy_production_s[i]) << ','
       << fmt(r.rates.heat_series[i]) << ','
       << fmt(r.rates.decomposition_residual[i]) << '\n';
  }
}

void write_manifest(const std::string& csv_path, const RunConfig& cfg,
                    std::optional<double> steady_distance) {
  std::ofstream os(csv_path + ".manifest");
  if (!os) throw std::runtime_error("cannot open " + csv_path + ".manifest");
  os << "version=" << kVersion << '\n'
     << "preset=" << (cfg.preset.empty() ? "none" : cfg.preset) << '\n'
     << "omega_s=" << fmt(cfg.params.omega_s) << '\n'
     << "omega_a=" << fmt(cfg.params.omega_a) << '\n'
     << "jx=" << fmt(cfg.params.jx) << '\n'
     << "jy=" << fmt(cfg.params.jy) << '\n'
     << "jz=" << fmt(cfg.params.jz) << '\n'
     << "gamma=" << fmt(cfg.params.gamma) << '\n'
     << "Gamma=" << fmt(cfg.params.big_gamma) << '\n'
     << "state_s=" << cfg.state_s << '\n'
     << "state_s2="
     << (cfg.state_s2.empty() ? orthogonal_partner(cfg.state_s) : cfg.state_s2)
     << '\n'
     << "state_a=" << cfg.state_a << '\n'
     << "t_max=" << fmt(cfg.t_max) << '\n'
     << "steps=" << cfg.steps << '\n'
     << "log_base=" << (cfg.log_base == 2 ? "2" : "e") << '\n'
     << "integrator_rtol=1e-9\nintegrator_atol=1e-12\n"
     << "eps_log=" << fmt(kEpsLog) << '\n';
  if (steady_distance)
    os << "steady_state_distance_at_t_max=" << fmt(*steady_distance) << '\n';
  for (const SweepAxis& ax : cfg.sweeps)
    os << "sweep=" << ax.param << ':' << fmt(ax.min) << ':' << fmt(ax.max)
       << ':' << ax.n << '\n';
}

// ------------------------------- validate -----------------------------------

namespace {

struct Check {
  std::ostream& os;
  bool all_ok = true;
  void operator()(const std::string& name, bool ok, double measured,
                  double bound) {
    os << (ok ? "[PASS] " : "[FAIL] ") << name << "  (measured " << measured
       << ", bound " << bound << ")\n";
    all_ok = all_ok && ok;
  }
};

Matrix4 random_state4(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Matrix4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(n(rng), n(rng));
  Matrix4 rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

bool validate_suite(std::ostream& os, bool corrupt_lambda) {
  Check check{os};
  std::mt19937_64 rng(20260810);

  const ModelParams p{1.0, 1.0, 1.0, 1.0, 0.0, 10.0, 1.0};
  const analytic::RestrictedParams rp = analytic::RestrictedParams::from(p);

  // element equations against the general generator
  {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Matrix4 rho = random_state4(rng);
      const Matrix4 a = analytic::element_rhs(rp, rho);
      const Matrix4 b = model::apply_lindbladian(p, rho);
      worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
    }
    check("element equations match the general generator", worst <= 1e-10,
          worst, 1e-10);
  }

  // closed-form reduced map against the integrated joint dynamics
  {
    const Matrix2 rho_s0 = named_state("bloch:0.3,0.2,-0.4");
    const std::vector<double> grid = dynamics::uniform_grid(10.0, 401);
    const dynamics::Trajectory traj = dynamics::evolve(
        p, ops::kron(rho_s0, 0.5 * Matrix2::Identity()), grid, 1e-10, 1e-13);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Matrix2 ana = analytic::analytic_reduced_state(grid[i], rp, rho_s0);
      if (corrupt_lambda && grid[i] > 0.0) ana(0, 0) += 1e-3;
      worst = std::max(worst,
                       (ana - traj.reduced_s(i)).cwiseAbs().maxCoeff());
    }
    check("closed-form reduced map matches the integrator", worst <= 1e-6,
          worst, 1e-6);
  }

  // time-local generator against finite differences of the reduced dynamics
  {
    const Matrix2 rho_s0 = named_state("bloch:-0.2,0.5,0.3");
    const Matrix4 rho0 = ops::kron(rho_s0, 0.5 * Matrix2::Identity());
    double worst = 0.0;
    int singular = 0;
    const double dt = 1e-3;
    for (double t = 0.05; t <= 10.0; t += 0.05) {
      const std::vector<double> stencil = {t - 2 * dt, t - dt, t, t + dt,
                                           t + 2 * dt};
      std::vector<Matrix2> red;
      const dynamics::Trajectory tr = dynamics::evolve(
          p, rho0,
          [&] {
            std::vector<double> g{0.0};
            g.insert(g.end(), stencil.begin(), stencil.end());
            return g;
          }(),
          1e-11, 1e-14);
      for (std::size_t i = 1; i < tr.times.size(); ++i)
        red.push_back(tr.reduced_s(i));
      const Matrix2 fd =
          (red[0] - 8.0 * red[1] + 8.0 * red[3] - red[4]) / (12.0 * dt);
      try {
        const Matrix2 k = analytic::tcl_apply(red[2], t, rp);
        worst = std::max(worst, (k - fd).cwiseAbs().maxCoeff());
      } catch (const std::domain_error&) {
        ++singular;  // flagged point, skipped
      }
    }
    check("time-local generator matches d rho_S/dt", worst <= 1e-5, worst,
          1e-5);
    os << "       (singular-generator points skipped: " << singular << ")\n";
  }

  // Spohn rate vs finite difference of the joint relative entropy
  {
    const dynamics::SteadyState ss = dynamics::steady_state(p);
    const Matrix4 rho0 =
        ops::kron(named_state("e"), named_state("plus"));
    const std::vector<double> grid = dynamics::uniform_grid(5.0, 2001);
    const dynamics::Trajectory traj = dynamics::evolve(p, rho0, grid);
    std::vector<double> rel(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      rel[i] = ops::relative_entropy(traj.states[i], ss.state);
    const std::vector<double> d = thermo::finite_difference(grid, rel);
    double worst = 0.0;
    const model::Superoperator l = model::liouvillian_matrix(p);
    for (std::size_t i = 200; i + 1 < grid.size(); ++i) {
      const thermo::SpohnRate sr = thermo::spohn_rate(
          [&l](const Matrix& r) { return ops::unvec(l * ops::vec(r), 4); },
          traj.states[i], ss.state);
      worst = std::max(worst, std::abs(sr.value + d[i]));
    }
    check("Spohn rate matches -d/dt S(rho || rho_inf)", worst <= 1e-4, worst,
          1e-4);
  }

  // decomposition identity on random tuples
  {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Matrix4 rho = random_state4(rng);
      const Matrix2 tau = named_state("bloch:0.1,0.0,0.4");
      const Matrix2 w = named_state("bloch:-0.3,0.2,0.1");
      worst = std::max(worst, thermo::decomposition_residual(rho, tau, w));
    }
    check("relative-entropy decomposition identity", worst <= 1e-10, worst,
          1e-10);
  }

  // product form of the steady state
  {
    const dynamics::SteadyState ss = dynamics::steady_state(p);
    const double err =
        (ss.state - dynamics::product_steady_state(p)).cwiseAbs().maxCoeff();
    check("steady state factorizes at jx == jy", err <= 1e-8, err, 1e-8);
  }

  // degenerate-delta refusal surfaces as an error, not a crash
  {
    bool refused = false;
    try {
      analytic::RestrictedParams bad = rp;
      bad.j = bad.eta();
      analytic::lambda_functions(1.0, bad);
    } catch (const std::domain_error&) {
      refused = true;
    }
    check("eta == J refused as degenerate delta", refused, refused ? 1 : 0, 1);
  }

  return check.all_ok;
}

}  // namespace qsa::experiments
