#include "mahlervol/cli.hpp"

#include <cstdio>
#include <string>

#include "mahlervol/apoly.hpp"
#include "mahlervol/common.hpp"
#include "mahlervol/mahler.hpp"
#include "mahlervol/polygons.hpp"
#include "mahlervol/report.hpp"
#include "mahlervol/spectrum.hpp"
#include "mahlervol/svg_render.hpp"

namespace mahlervol {
namespace {

void check_format(const RunConfig& cfg, bool csv_ok) {
  if (cfg.format != "json" && cfg.format != "csv")
    throw domain_error("unknown format: " + cfg.format);
  if (cfg.format == "csv" && !csv_ok)
    throw domain_error("csv output is not available for command " + cfg.command);
}

void emit_header(JsonWriter& w, const RunConfig& cfg) {
  w.begin_object();
  w.key("schema_version").value(1);
  w.key("command").value(cfg.command);
  w.key("m").value(cfg.m);
  w.key("n").value(cfg.n);
}

void emit_root_scan(JsonWriter& w, const RootScan& scan) {
  w.key("roots").begin_array();
  for (const auto& r : scan.roots) {
    w.begin_object();
    w.key("index").value(r.index);
    w.key("sigma").value(r.sigma);
    w.key("re_alpha").value(r.alpha.real());
    w.key("im_alpha").value(r.alpha.imag());
    w.end_object();
  }
  w.end_array();
  w.key("tangents").begin_array();
  for (double s : scan.tangents) w.value(s);
  w.end_array();
  w.key("near_threshold").value(scan.near_threshold);
}

std::string run_measure(const RunConfig& cfg) {
  FamilyParams p = make_family(cfg.m, cfg.n, cfg.t);
  MeasureReport rep = closed_form_measure(p);
  QuadratureOptions opt;
  opt.abs_tol = cfg.tol;
  double quad = quadrature_measure(p, opt);

  JsonWriter w;
  emit_header(w, cfg);
  w.key("t").value(p.t);
  w.key("closed_form").begin_object();
  w.key("total").value(rep.total);
  w.key("log_term").value(rep.log_term);
  w.key("dilog_term").value(rep.dilog_term);
  w.key("arg_term").value(rep.arg_term);
  w.key("tangency_warning").value(rep.tangency_warning);
  w.end_object();
  w.key("quadrature").begin_object();
  w.key("abs_tol").value(cfg.tol);
  w.key("total").value(quad);
  w.end_object();
  w.key("residual").value(std::abs(rep.total - quad));
  emit_root_scan(w, rep.scan);
  w.key("arcs").begin_array();
  for (const auto& a : rep.arcs.arcs) {
    w.begin_object();
    w.key("start").value(a.start);
    w.key("end").value(a.end);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string run_roots(const RunConfig& cfg) {
  FamilyParams p = make_family(cfg.m, cfg.n, cfg.t);
  RootScan scan = find_unit_roots(p);

  if (cfg.format == "csv") {
    std::string s = "kind,index,sigma,re_alpha,im_alpha\n";
    for (const auto& r : scan.roots) {
      s += "root," + std::to_string(r.index) + "," + format_double(r.sigma) +
           "," + format_double(r.alpha.real()) + "," +
           format_double(r.alpha.imag()) + "\n";
    }
    for (double t : scan.tangents) s += "tangent,," + format_double(t) + ",,\n";
    return s;
  }

  JsonWriter w;
  emit_header(w, cfg);
  w.key("t").value(p.t);
  w.key("count").value(int(scan.roots.size()));
  emit_root_scan(w, scan);
  w.end_object();
  return w.str() + "\n";
}

std::string run_polygons(const RunConfig& cfg) {
  FamilyParams p = make_family(cfg.m, cfg.n, cfg.t);
  std::vector<SignedPolygon> polys = enumerate_polygons(p);

  JsonWriter w;
  emit_header(w, cfg);
  w.key("t").value(p.t);
  w.key("count").value(int(polys.size()));
  w.key("polygons").begin_array();
  for (size_t i = 0; i < polys.size(); ++i) {
    const AdmissiblePolygon& poly = polys[i].polygon;
    w.begin_object();
    w.key("index").value(int(i) + 1);
    w.key("epsilon").value(polys[i].epsilon);
    w.key("source_sigma").value(poly.source_sigma);
    w.key("case_k").value(poly.cases.k);
    w.key("case_l").value(poly.cases.l);
    w.key("eta").value(poly.eta);
    w.key("tau").value(poly.tau);
    w.key("winding_h").value(poly.winding_h);
    w.key("same_direction").value(poly.same_direction);
    w.key("radius").value(poly.radius);
    w.key("volume").value(polygon_volume(poly));
    w.key("vertices").begin_array();
    for (const auto& v : poly.vertices) {
      w.begin_array();
      w.value(v.real());
      w.value(v.imag());
      w.end_array();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string run_verify(const RunConfig& cfg) {
  FamilyParams p = make_family(cfg.m, cfg.n, cfg.t);
  TheoremCheck chk = verify_main_theorem(p);
  if (!(chk.residual <= cfg.tol))
    throw accuracy_error("volume identity residual exceeds tolerance",
                         chk.rhs, chk.residual);

  JsonWriter w;
  emit_header(w, cfg);
  w.key("t").value(p.t);
  w.key("lhs").value(chk.lhs);
  w.key("rhs").value(chk.rhs);
  w.key("residual").value(chk.residual);
  w.key("polygon_count").value(chk.polygon_count);
  w.key("tangency_warning").value(chk.tangency_warning);
  w.key("tolerance").value(cfg.tol);
  w.key("pass").value(true);
  w.end_object();
  return w.str() + "\n";
}

std::string run_sweep(const RunConfig& cfg) {
  ThresholdScan scan = threshold_scan(cfg.m, cfg.n, cfg.t_lo, cfg.t_hi, cfg.steps);

  if (cfg.format == "csv") {
    std::string s = "t,kind,count_before,count_after,sigma,boundary_index,tau_boundary\n";
    for (const auto& e : scan.events) {
      s += format_double(e.t);
      s += e.kind == ThresholdKind::root_count ? ",root_count," : ",shape,";
      s += std::to_string(e.count_before) + "," + std::to_string(e.count_after) +
           "," + format_double(e.sigma) + "," + std::to_string(e.boundary_index) +
           "," + (e.tau_boundary ? "true" : "false") + "\n";
    }
    return s;
  }

  JsonWriter w;
  emit_header(w, cfg);
  w.key("t_lo").value(cfg.t_lo);
  w.key("t_hi").value(cfg.t_hi);
  w.key("steps").value(cfg.steps);
  w.key("count").value(int(scan.events.size()));
  w.key("events").begin_array();
  for (const auto& e : scan.events) {
    w.begin_object();
    w.key("t").value(e.t);
    w.key("kind").value(std::string(
        e.kind == ThresholdKind::root_count ? "root_count" : "shape"));
    w.key("count_before").value(e.count_before);
    w.key("count_after").value(e.count_after);
    w.key("sigma").value(e.sigma);
    w.key("boundary_index").value(e.boundary_index);
    w.key("tau_boundary").value(e.tau_boundary);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string run_apoly(const RunConfig& cfg) {
  ExponentSystem sys = build_system(cfg.m, cfg.n);
  bool nz = check_neumann_zagier(sys);
  std::vector<IdentitySolution> sols = identity_solutions(cfg.m, cfg.n);

  JsonWriter w;
  emit_header(w, cfg);
  w.key("alpha").value(static_cast<long long>(sys.alpha));
  w.key("beta").value(static_cast<long long>(sys.beta));
  w.key("k").value(sys.k);
  w.key("neumann_zagier").value(nz);
  w.key("U").begin_array();
  for (const auto& row : sys.U) {
    w.begin_array();
    for (std::int64_t x : row) w.value(static_cast<long long>(x));
    w.end_array();
  }
  w.end_array();
  w.key("identity_count").value(int(sols.size()));
  w.key("identity_solutions").begin_array();
  for (const auto& s : sols) {
    w.begin_object();
    w.key("arg_u").value(s.arg_u);
    w.key("re_u").value(s.u.real());
    w.key("im_u").value(s.u.imag());
    w.key("re_w").value(s.w.real());
    w.key("im_w").value(s.w.imag());
    w.key("re_z").value(s.z.real());
    w.key("im_z").value(s.z.imag());
    w.key("degenerate").value(s.degenerate);
    w.key("in_sum_family").value(s.in_sum_family);
    w.key("in_diff_family").value(s.in_diff_family);
    w.end_object();
  }
  w.end_array();
  if (cfg.m + cfg.n <= 9) {
    TildeCheck tc = tilde_measure_check(cfg.m, cfg.n);
    w.key("tilde_check").begin_object();
    w.key("lhs").value(tc.lhs);
    w.key("rhs").value(tc.rhs);
    w.key("residual").value(tc.residual);
    w.end_object();
  }
  w.end_object();
  return w.str() + "\n";
}

std::string run_svg(const RunConfig& cfg) {
  FamilyParams p = make_family(cfg.m, cfg.n, cfg.t);
  std::vector<SignedPolygon> polys = enumerate_polygons(p);
  std::vector<std::string> paths = write_polygon_svgs(polys, cfg.out_dir);

  JsonWriter w;
  emit_header(w, cfg);
  w.key("t").value(p.t);
  w.key("count").value(int(paths.size()));
  w.key("files").begin_array();
  for (const auto& path : paths) w.value(path);
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

std::string dispatch(const RunConfig& cfg) {
  bool csv_ok = cfg.command == "roots" || cfg.command == "sweep";
  check_format(cfg, csv_ok);
  if (cfg.command == "measure") return run_measure(cfg);
  if (cfg.command == "roots") return run_roots(cfg);
  if (cfg.command == "polygons") return run_polygons(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  if (cfg.command == "sweep") return run_sweep(cfg);
  if (cfg.command == "apoly") return run_apoly(cfg);
  if (cfg.command == "svg") return run_svg(cfg);
  throw domain_error(cfg.command.empty() ? "no command given"
                                         : "unknown command: " + cfg.command);
}

int emit_error(int code, const char* kind, const std::string& message) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(1);
  w.key("error").begin_object();
  w.key("kind").value(std::string(kind));
  w.key("message").value(message);
  w.end_object();
  w.end_object();
  std::fprintf(stderr, "%s\n", w.str().c_str());
  return code;
}

}  // namespace

int run_cli(const RunConfig& cfg) {
  try {
    write_text_output(cfg.output_path, dispatch(cfg));
    return 0;
  } catch (const domain_error& e) {
    return emit_error(1, "domain", e.what());
  } catch (const accuracy_error& e) {
    return emit_error(2, "accuracy", e.what());
  } catch (const io_error& e) {
    return emit_error(3, "io", e.what());
  } catch (const internal_error& e) {
    return emit_error(2, "internal", e.what());
  }
}

}  // namespace mahlervol
