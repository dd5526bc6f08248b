// Copyright 2026 The hyperradon Authors
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

// Command-line front end over the C interface.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hyperradon/hyperradon.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNonConvergence = 3, kConfig = 4, kIo = 5, kDomain = 6, kInternal = 7 };

const char* kExitHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  verification failed (verify)\n"
    "  2  usage error or invalid parameters\n"
    "  3  numerical non-convergence\n"
    "  4  configuration error (--config, settings keys)\n"
    "  5  I/O error writing output\n"
    "  6  domain error or pole of a special function\n"
    "  7  internal error\n"
    "\nEnvironment: HYPERRADON_THREADS caps the worker count.";

int exit_for(hr_status s) {
  switch (s) {
    case HR_OK: return kOk;
    case HR_ERR_INVALID_ARGUMENT: return kUsage;
    case HR_ERR_NONCONVERGENCE: return kNonConvergence;
    case HR_ERR_CONFIG: return kConfig;
    case HR_ERR_IO: return kIo;
    case HR_ERR_DOMAIN:
    case HR_ERR_POLE:
    case HR_ERR_OUT_OF_RANGE:
    case HR_ERR_DEGENERATE:
    case HR_ERR_UNDERFLOW: return kDomain;
    case HR_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

struct Failure {
  int code;
  std::string message;
};

void check(hr_context* ctx, hr_status s) {
  if (s != HR_OK) throw Failure{exit_for(s), std::string(hr_status_name(s)) + ": " + hr_last_error(ctx)};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::vector<double> grid(double lo, double hi, int n, bool log) {
  if (n < 1) throw Failure{kUsage, "--n must be at least 1"};
  if (!(hi >= lo)) throw Failure{kUsage, "--xmax must not be below --xmin"};
  if (log && !(lo > 0.0)) throw Failure{kUsage, "--log needs --xmin > 0"};
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.0 : double(i) / (n - 1);
    xs[i] = log ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
  }
  return xs;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Failure{kIo, "cannot write to standard output"};
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{kIo, "cannot open '" + path + "' for writing"};
  f << text;
  if (!f.flush()) throw Failure{kIo, "write to '" + path + "' failed"};
}

// Minimal line plot: frame, one polyline, axis extrema and a title.
std::string svg_plot(const std::string& title, const std::string& xlabel, const std::vector<double>& x,
                     const std::vector<double>& y) {
  const double W = 640, H = 400, L = 70, R = 20, T = 40, B = 50;
  double x0 = x.front(), x1 = x.back(), y0 = 0, y1 = 0;
  for (double v : y)
    if (std::isfinite(v)) y0 = std::min(y0, v), y1 = std::max(y1, v);
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  auto px = [&](double v) { return L + (v - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double v) { return H - B - (v - y0) / (y1 - y0) * (H - T - B); };
  std::ostringstream s;
  char buf[128];
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf, "<rect x=\"%.0f\" y=\"%.0f\" width=\"%.0f\" height=\"%.0f\" fill=\"none\" stroke=\"black\"/>\n", L, T,
                W - L - R, H - T - B);
  s << buf;
  if (y0 < 0 && y1 > 0) {
    std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#999\"/>\n", L, py(0), W - R, py(0));
    s << buf;
  }
  s << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.2\" points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(y[i])) continue;
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(x[i]), py(y[i]));
    s << buf;
  }
  s << "\"/>\n";
  auto text = [&](double tx, double ty, const char* anchor, const std::string& str) {
    s << "<text x=\"" << tx << "\" y=\"" << ty << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"" << anchor
      << "\">" << str << "</text>\n";
  };
  std::snprintf(buf, sizeof buf, "%.4g", x0);
  text(L, H - B + 18, "start", buf);
  std::snprintf(buf, sizeof buf, "%.4g", x1);
  text(W - R, H - B + 18, "end", buf);
  std::snprintf(buf, sizeof buf, "%.4g", y1);
  text(L - 6, T + 4, "end", buf);
  std::snprintf(buf, sizeof buf, "%.4g", y0);
  text(L - 6, H - B, "end", buf);
  text((L + W - R) / 2, H - 12, "middle", xlabel);
  text(W / 2, 24, "middle", title);
  s << "</svg>\n";
  return s.str();
}

struct Params {
  hr_params* p = nullptr;
  Params() {
    if (hr_params_create(&p) != HR_OK) throw Failure{kInternal, "cannot allocate parameters"};
  }
  ~Params() { hr_params_destroy(p); }
};

struct Context {
  hr_context* c = nullptr;
  Context() {
    if (hr_context_create(&c) != HR_OK) throw Failure{kInternal, "cannot allocate context"};
  }
  ~Context() { hr_context_destroy(c); }
};

void configure(hr_context* ctx, const std::string& config, int threads) {
  if (!config.empty()) check(ctx, hr_context_load_config(ctx, config.c_str()));
  if (threads > 0) check(ctx, hr_context_set(ctx, "threads", threads));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic-plane spectral functions and Radon transforms", "hyperradon"};
  app.footer(kExitHelp);
  app.require_subcommand(1);
  std::string config;
  int threads = 0;
  app.add_option("--config", config, "key=value settings file");
  app.add_option("--threads", threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

  // eval
  auto* eval = app.add_subcommand("eval", "tabulate a special function on a grid");
  std::string function, out_path, svg_path;
  double xmin = 0.1, xmax = 10.0;
  int npts = 100;
  bool logscale = false;
  std::map<std::string, double> pvals;
  const std::vector<std::pair<std::string, std::string>> pkeys = {
      {"kappa", "spectral parameter κ"}, {"nu", "order ν"}, {"nu-im", "imaginary part of the order"},
      {"m", "azimuthal order"},          {"k", "Fourier index"}, {"theta", "extension angle"},
      {"n-index", "bound-state index"},  {"im", "imaginary part of the argument (gamma)"},
      {"xpos", "half-plane x coordinate (chi)"}, {"phi", "polar angle (polar)"}};
  eval->add_option("function", function, std::string("one of: ") + hr_eval_functions())->required();
  for (const auto& [k, help] : pkeys) eval->add_option("--" + k, pvals[k], help);
  eval->add_option("--xmin", xmin, "grid start");
  eval->add_option("--xmax", xmax, "grid end");
  eval->add_option("--n", npts, "grid points");
  eval->add_flag("--log", logscale, "logarithmic grid");
  eval->add_option("-o,--output", out_path, "CSV file (default stdout)");
  eval->add_option("--svg", svg_path, "also write an SVG line plot");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  std::string suite = "all", report_path;
  double theta_sweep = NAN;
  verify->add_option("suite", suite, "geometry, group, specfun, spectral, radon or all");
  verify->add_option("--theta", theta_sweep, "extra extension angle for the spectral suite");
  verify->add_option("-o,--output", report_path, "JSON file (default stdout)");

  // radon
  auto* radon = app.add_subcommand("radon", "Radon transform of a mode over a kinematic grid");
  std::string model = "disc";
  double rk = 2, rnu = 1.0, fixed = 0.0;
  double rlo = -2.0, rhi = 2.0;
  int rn = 41;
  bool fit_theta = false, antipodal = false, intertwine = false;
  std::string rout, rsvg;
  radon->add_option("--model", model, "disc or halfplane")->check(CLI::IsMember({"disc", "halfplane"}));
  radon->add_option("--k", rk, "Fourier index (integer on the disc)");
  radon->add_option("--nu", rnu, "spectral parameter ν > 0");
  radon->add_option("--fixed", fixed, "θ (disc) or t (halfplane) held fixed");
  radon->add_option("--xmin", rlo, "grid start: ξ (disc) or η (halfplane)");
  radon->add_option("--xmax", rhi, "grid end");
  radon->add_option("--n", rn, "grid points");
  radon->add_flag("--fit-theta", fit_theta, "fit the extension angle from the large-η transform (halfplane)");
  radon->add_flag("--antipodal-check", antipodal, "add |ℛ(θ,ξ) − ℛ(θ+π,−ξ)| column (disc)");
  radon->add_flag("--intertwine", intertwine, "report the wave-operator residual over the grid");
  radon->add_option("-o,--output", rout, "CSV file (default stdout)");
  radon->add_option("--svg", rsvg, "also write an SVG plot of the real part");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Context ctx;
    configure(ctx.c, config, threads);

    if (*eval) {
      const char* keys = hr_eval_parameters(function.c_str());
      if (!keys) throw Failure{kUsage, "unknown function '" + function + "' (known: " + hr_eval_functions() + ")"};
      Params params;
      std::ostringstream head;
      head << "# function," << function;
      for (const auto& [k, help] : pkeys) {
        if (eval->count("--" + k) == 0) continue;
        const std::string key = k == "nu-im" ? "nu_im" : k == "n-index" ? "n" : k;
        check(ctx.c, hr_params_set(params.p, key.c_str(), pvals[k]));
        head << "," << key << "=" << pvals[k];
      }
      const auto xs = grid(xmin, xmax, npts, logscale);
      std::vector<hr_value> vals(xs.size());
      check(ctx.c, hr_eval(ctx.c, function.c_str(), params.p, xs.data(), xs.size(), vals.data()));
      const bool complex_valued = function == "gamma" || function == "besselJ" || function == "chi";
      std::ostringstream csv;
      csv << head.str() << "\n" << (complex_valued ? "x,value,imag,err\n" : "x,value,err\n");
      std::vector<double> ys;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        csv << fmt(xs[i]) << "," << fmt(vals[i].re) << ",";
        if (complex_valued) csv << fmt(vals[i].im) << ",";
        csv << fmt(vals[i].abs_error) << "\n";
        ys.push_back(vals[i].re);
      }
      emit(csv.str(), out_path);
      if (!svg_path.empty()) emit(svg_plot(head.str().substr(2), "x", xs, ys), svg_path);
      return kOk;
    }

    if (*verify) {
      char* json = nullptr;
      int passed = 0;
      check(ctx.c, hr_verify(ctx.c, suite.c_str(), theta_sweep, &json, &passed));
      std::string text(json);
      hr_free_string(json);
      emit(text + "\n", report_path);
      return passed ? kOk : kVerifyFailed;
    }

    if (*radon) {
      const bool disc = model == "disc";
      if (antipodal && !disc) throw Failure{kUsage, "--antipodal-check applies to the disc model"};
      if (fit_theta && disc) throw Failure{kUsage, "--fit-theta applies to the halfplane model"};
      const auto xs = grid(rlo, rhi, rn, false);
      if (!disc && !(xs.front() > 0.0)) throw Failure{kUsage, "halfplane grid is over η > 0"};
      const hr_model m = disc ? HR_MODEL_DISC : HR_MODEL_HALF_PLANE;
      std::vector<double> a(xs.size(), fixed), xi(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) xi[i] = disc ? xs[i] : std::log(xs[i]);
      std::vector<hr_value> vals(xs.size());
      check(ctx.c, hr_radon_mode(ctx.c, m, rk, rnu, a.data(), xi.data(), xs.size(), vals.data()));
      std::vector<hr_value> anti;
      double scale = 0.0;
      for (const auto& v : vals) scale = std::max(scale, std::hypot(v.re, v.im));
      if (antipodal) {
        std::vector<double> a2(xs.size(), fixed + M_PI), xi2(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) xi2[i] = -xi[i];
        anti.resize(xs.size());
        check(ctx.c, hr_radon_mode(ctx.c, m, rk, rnu, a2.data(), xi2.data(), xs.size(), anti.data()));
      }
      std::ostringstream csv;
      csv << "# radon,model=" << model << ",k=" << rk << ",nu=" << rnu << "," << (disc ? "theta=" : "t=") << fixed << "\n";
      csv << (disc ? "xi,re,im,closed_re,closed_im,rel_diff" : "eta,re,im,asym_re,asym_im,rel_diff")
          << (antipodal ? ",antipodal_dev" : "") << "\n";
      std::vector<double> ys;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        hr_value ref;
        check(ctx.c, hr_radon_reference(ctx.c, m, rk, rnu, fixed, xi[i], &ref));
        const double diff = std::hypot(vals[i].re - ref.re, vals[i].im - ref.im);
        const double mag = std::hypot(ref.re, ref.im);
        const double rel = mag > 1e-12 * std::max(scale, 1e-300) ? diff / mag : diff / std::max(scale, 1e-300);
        csv << fmt(xs[i]) << "," << fmt(vals[i].re) << "," << fmt(vals[i].im) << "," << fmt(ref.re) << "," << fmt(ref.im)
            << "," << fmt(rel);
        if (antipodal)
          csv << "," << fmt(std::hypot(vals[i].re - anti[i].re, vals[i].im - anti[i].im) / std::max(scale, 1e-300));
        csv << "\n";
        ys.push_back(vals[i].re);
      }
      if (intertwine) {
        double res = 0.0;
        check(ctx.c, hr_radon_intertwine(ctx.c, m, rk, rnu, fixed, xs.front(), xs.back(), int(xs.size()), &res));
        csv << "# intertwine_residual=" << fmt(res) << "\n";
      }
      if (fit_theta) {
        const double lo = 20.0 / std::abs(rk), hi = lo + 12.0 * M_PI / std::abs(rk);
        double th = 0.0, rms = 0.0;
        check(ctx.c, hr_radon_fit_theta(ctx.c, rk, rnu, lo, hi, 60, &th, &rms));
        csv << "# fitted_theta=" << fmt(th) << ",three_quarter_pi=" << fmt(3 * M_PI / 4) << ",rms=" << fmt(rms) << "\n";
      }
      emit(csv.str(), rout);
      if (!rsvg.empty()) emit(svg_plot("radon " + model, disc ? "xi" : "eta", xs, ys), rsvg);
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "hyperradon: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "hyperradon: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
