use mft_algebra::rational::format_rational;
use mft_algebra::{rat, rat_int, Rational};
use mft_catalan::{
    evaluate_planar, expand_planar, naive_recursion_eval, render_chords, special_table_count, table_count,
    table_to_monomial, CatalanTable, PlanarData,
};
use mft_cubic::{c_series, critical_coupling, CubicSolution, MoyalMeasure};
use mft_kontsevich::{
    free_energies_laplacian, free_energy, loop_residual, FreeEnergy, IntersectionTable, Route, Solver, TruncatedZ,
};
use mft_moyal4::{effective_dimension, g2_perturbative, params_of, DeformedMeasure4};
use mft_quartic::{deform, RationalR, POLE_WARNING};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::args::{CatalanCmd, Command, Convention, CubicArgs, Format, KontsevichCmd, Moyal4Args, QuarticArgs, RouteArg};
use crate::{load_spectrum, CliError, Output, RunConfig};

type Res = Result<Output, CliError>;

pub(crate) fn dispatch(cmd: &Command, cfg: &RunConfig) -> (String, Res) {
    match cmd {
        Command::Kontsevich(k) => {
            let name = match k {
                KontsevichCmd::FreeEnergy { .. } => "kontsevich free-energy",
                KontsevichCmd::Intersections { .. } => "kontsevich intersections",
                KontsevichCmd::Correlation { .. } => "kontsevich correlation",
                KontsevichCmd::Virasoro { .. } => "kontsevich virasoro",
            };
            (name.into(), kontsevich(k))
        }
        Command::Cubic(a) => ("cubic".into(), cubic(a)),
        Command::Catalan(c) => {
            let name = match c {
                CatalanCmd::Count { .. } => "catalan count",
                CatalanCmd::Expand { .. } => "catalan expand",
                CatalanCmd::Verify { .. } => "catalan verify",
            };
            (name.into(), catalan(c, cfg))
        }
        Command::QuarticFinite(a) => ("quartic-finite".into(), quartic(a, cfg)),
        Command::Moyal4(a) => ("moyal4".into(), moyal4(a, cfg)),
    }
}

fn check(ok: bool, message: impl FnOnce() -> String, v: Value) -> Res {
    if ok {
        Ok(Output::Json(v))
    } else {
        Err(CliError::Tolerance { message: message(), output: Box::new(v) })
    }
}

fn kontsevich(cmd: &KontsevichCmd) -> Res {
    match *cmd {
        KontsevichCmd::FreeEnergy { genus, route } => {
            let run = |r| free_energy(genus, r);
            let (fe, agree) = match route {
                RouteArg::Annihilate => (run(Route::Annihilate)?, None),
                RouteArg::Laplacian => (run(Route::Laplacian)?, None),
                RouteArg::Both => {
                    let a = run(Route::Annihilate)?;
                    let l = run(Route::Laplacian)?;
                    let same = a == l;
                    (a, Some(same))
                }
            };
            let mut v = fe.to_json();
            if let FreeEnergy::Stable { poly, .. } = &fe {
                let terms: Vec<Value> = poly
                    .terms()
                    .map(|(m, c)| json!({"r_exponents": m, "coefficient": format_rational(c)}))
                    .collect();
                v["terms"] = Value::Array(terms);
            }
            v["routes_agree"] = json!(agree);
            check(agree != Some(false), || format!("annihilation and Laplacian routes disagree at genus {genus}"), v)
        }
        KontsevichCmd::Intersections { genus } => {
            let fe = free_energy(genus, Route::Laplacian)?;
            Ok(Output::Json(IntersectionTable::from_free_energy(&fe)?.to_json()))
        }
        KontsevichCmd::Correlation { genus, boundaries, check_loop } => {
            let mut solver = Solver::for_target(genus, boundaries);
            let mut v = solver.correlation(genus, boundaries)?.to_json();
            if !check_loop {
                return Ok(Output::Json(v));
            }
            let zero = loop_residual(&mut solver, genus, boundaries)?.is_zero();
            v["loop_residual_is_zero"] = json!(zero);
            check(zero, || format!("loop equation residual is nonzero for (g, b) = ({genus}, {boundaries})"), v)
        }
        KontsevichCmd::Virasoro { n, order, convention } => {
            if order == 0 {
                return Err(CliError::Domain("--order must be at least 1".into()));
            }
            let fes = free_energies_laplacian(order + 1)?;
            let stable: Vec<_> = fes.iter().filter_map(|f| f.poly().cloned()).collect();
            let z = TruncatedZ::from_free_energies(&stable, convention == Convention::Np);
            let report = z.virasoro(n)?;
            let residuals: Vec<String> = report.residuals.iter().map(|r| r.to_string()).collect();
            let v = json!({
                "n": n,
                "order": order,
                "convention": if z.is_np() { "np" } else { "stable" },
                "residuals_by_u_order": residuals,
                "undetermined_orders": report.insufficient,
                "all_vanish": report.all_vanish(),
            });
            check(report.all_vanish(), || format!("L_{n} Z does not vanish"), v)
        }
    }
}

fn cubic(a: &CubicArgs) -> Res {
    let m = MoyalMeasure::new(a.dim, a.renorm_dim)?;
    let (lambda_c, c_c) = critical_coupling(&m)?;
    let mut out = json!({
        "dim": a.dim,
        "renorm_dim": a.renorm_dim,
        "lambda": a.lambda,
        "lambda_c_estimate": lambda_c,
        "c_at_lambda_c": c_c,
    });
    if let Some(n) = a.series {
        out["values"] = json!({"c_taylor_coefficients": c_series(&m, n)?});
        out["c"] = Value::Null;
        return Ok(Output::Json(out));
    }
    let sol = CubicSolution::new(m, a.lambda)?;
    out["c"] = json!(sol.c());
    out["values"] = match a.x {
        Some(x) => json!({"x": x, "g0": sol.g0(x)?}),
        None => Value::Null,
    };
    Ok(Output::Json(out))
}

fn random_data(n: usize, rng: &mut StdRng) -> Result<PlanarData, CliError> {
    let mut e: Vec<Rational> = Vec::new();
    while e.len() < n {
        let x = rat(rng.gen_range(-40..40), rng.gen_range(1..7));
        if !e.contains(&x) {
            e.push(x);
        }
    }
    let mut g2 = vec![vec![rat_int(0); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rat(rng.gen_range(-9..10), rng.gen_range(1..5));
            g2[i][j] = v.clone();
            g2[j][i] = v;
        }
    }
    Ok(PlanarData::new(e, g2)?)
}

fn permuted(d: &PlanarData, pi: &[usize]) -> Result<PlanarData, CliError> {
    let e = pi.iter().map(|&i| d.e[i].clone()).collect();
    let g2 = pi.iter().map(|&i| pi.iter().map(|&j| d.g2[i][j].clone()).collect()).collect();
    Ok(PlanarData::new(e, g2)?)
}

fn catalan(cmd: &CatalanCmd, cfg: &RunConfig) -> Res {
    match *cmd {
        CatalanCmd::Count { k } => {
            if k == 0 {
                return Err(CliError::Domain("table length k must be at least 1".into()));
            }
            let tables = CatalanTable::enumerate(k)?;
            let special = tables.iter().filter(|t| t.is_special()).count();
            let d = table_count(k as u64 - 1).to_string();
            let h = special_table_count(k as u64 - 1).to_string();
            let v = json!({
                "k": k,
                "count": tables.len(),
                "formula": d,
                "special_count": special,
                "special_formula": h,
            });
            let ok = tables.len().to_string() == d && special.to_string() == h;
            check(ok, || "enumeration disagrees with the closed formula".into(), v)
        }
        CatalanCmd::Expand { n, format } => {
            let monomials = expand_planar(n)?;
            match format {
                Format::Json => {
                    let list: Vec<Value> = monomials.iter().map(|m| m.to_json()).collect();
                    Ok(Output::Json(json!({"n": n, "count": list.len(), "monomials": list})))
                }
                Format::Dot => {
                    let mut s = String::new();
                    for t in CatalanTable::enumerate(n / 2)? {
                        s.push_str(&format!("// {t}\n"));
                        s.push_str(&render_chords(&t, n)?);
                    }
                    Ok(Output::Text(s))
                }
                Format::Text => {
                    let mut s = String::new();
                    for t in CatalanTable::enumerate(n / 2)? {
                        let m = table_to_monomial(&t, n)?;
                        let sign = if m.sign > 0 { '+' } else { '-' };
                        s.push_str(&format!("{sign} {t} chords={:?}\n", m.chords));
                    }
                    Ok(Output::Text(s))
                }
            }
        }
        CatalanCmd::Verify { n } => {
            let mut rng = StdRng::seed_from_u64(cfg.seed);
            let data = random_data(n, &mut rng)?;
            let lambda = rat(rng.gen_range(1..9), rng.gen_range(1..9));
            let table = evaluate_planar(n, &data, &lambda)?;
            let naive = naive_recursion_eval(n, &data, &lambda)?;
            let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let rev: Vec<usize> = (0..n).rev().collect();
            let rotated = evaluate_planar(n, &permuted(&data, &rot)?, &lambda)?;
            let reversed = evaluate_planar(n, &permuted(&data, &rev)?, &lambda)?;
            let equal = table == naive;
            let v = json!({
                "n": n,
                "lambda": format_rational(&lambda),
                "expansion": format_rational(&table),
                "recursion": format_rational(&naive),
                "equal": equal,
                "cyclic_invariant": rotated == table,
                "reversal_invariant": reversed == table,
            });
            let ok = equal && rotated == table && reversed == table;
            check(ok, || format!("table expansion and recursion differ at N = {n}"), v)
        }
    }
}

fn quartic(a: &QuarticArgs, cfg: &RunConfig) -> Res {
    let mut s = load_spectrum(&a.spectrum)?;
    if let Some(l) = a.lambda {
        s = s.with_lambda(l);
        s.validate()?;
    }
    let d = deform(&s)?;
    let head = json!({
        "lambda": s.lambda,
        "epsilon": d.epsilon,
        "varrho": d.varrho,
        "iterations": d.iterations,
        "fixed_point_residual": d.residual,
    });
    let r = RationalR::new(d)?;
    let eps = r.deformed().epsilon.clone();
    let mut v = head;
    if let Some(zw) = &a.two_point {
        let (z, w) = (zw[0], zw[1]);
        let dist = r.nearest_pole_distance(z, w);
        v["z"] = json!(z);
        v["w"] = json!(w);
        v["two_point"] = json!(r.two_point(z, w)?);
        v["two_point_rfe"] = json!(r.two_point_rfe(z, w)?);
        v["nearest_pole_distance"] = json!(dist);
        v["warning"] = if dist < POLE_WARNING {
            json!(format!("(z, w) lies within {dist:e} of a pole; the value may be inaccurate"))
        } else {
            Value::Null
        };
        return Ok(Output::Json(v));
    }
    if a.rfe {
        let mut worst: f64 = 0.0;
        let mut grid = Vec::new();
        for &p in &eps {
            let mut row = Vec::new();
            for &q in &eps {
                let g = r.two_point(p, q)?;
                let h = r.two_point_rfe(p, q)?;
                worst = worst.max((g - h).abs() / g.abs().max(1.0));
                row.push(h);
            }
            grid.push(row);
        }
        v["g_eps_rfe"] = json!(grid);
        v["max_route_difference"] = json!(worst);
        let tol = cfg.tol;
        return check(worst <= tol, || format!("routes differ by {worst:e} > {tol:e}"), v);
    }
    if a.check_identities {
        let mut pts: Vec<f64> = vec![0.1, 0.6, 1.4, 3.0];
        pts.extend(&eps);
        let (mut jzz, mut sde, mut sym, mut routes) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for &z in &pts {
            jzz = jzz.max(r.jzz_residual(z)?);
            for &w in &pts {
                sde = sde.max(r.sde_residual(z, w)?);
                let g = r.two_point(z, w)?;
                let scale = g.abs().max(1.0);
                sym = sym.max((g - r.two_point(w, z)?).abs() / scale);
                routes = routes.max((g - r.two_point_rfe(z, w)?).abs() / scale);
            }
        }
        let consistency = r.consistency_residual();
        v["residuals"] = json!({
            "loop_equation_diagonal": jzz,
            "loop_equation": sde,
            "symmetry": sym,
            "route_difference": routes,
            "rational_consistency": consistency,
        });
        v["grid"] = json!(pts);
        let worst = [jzz, sde, sym, routes, consistency].into_iter().fold(0.0, f64::max);
        let tol = cfg.tol;
        return check(worst <= tol, || format!("largest identity residual {worst:e} exceeds {tol:e}"), v);
    }
    v["rational_consistency"] = json!(r.consistency_residual());
    let fed: Result<Vec<f64>, _> = (0..r.len()).map(|q| r.free_energy_derivative(q)).collect();
    v["free_energy_derivative"] = json!(fed?);
    Ok(Output::Json(v))
}

fn moyal4(a: &Moyal4Args, cfg: &RunConfig) -> Res {
    let p = params_of(a.lambda, a.mu2)?;
    let m = DeformedMeasure4::new(p);
    let mut v = json!({
        "lambda": p.lambda,
        "alpha": p.alpha,
        "mu2": p.mu2,
        "c_lambda": p.c_lambda,
    });
    let tol = cfg.tol;
    if let Some(x) = a.measure {
        let (lo, hi) = m.bounds(x);
        let rho = m.rho(x)?;
        v["x"] = json!(x);
        v["rho"] = json!(rho);
        v["bounds"] = json!([lo, hi]);
        let inside = lo * (1.0 - 1e-13) <= rho && rho <= hi * (1.0 + 1e-13);
        v["inside_bounds"] = json!(inside);
        return check(inside, || format!("rho({x}) = {rho} lies outside [{lo}, {hi}]"), v);
    }
    if a.fredholm {
        let mut worst: f64 = 0.0;
        let mut rows = Vec::new();
        for x in [0.1, 1.0, 10.0, 100.0] {
            let r = m.fredholm_residual(x)?;
            worst = worst.max(r);
            rows.push(json!({"x": x, "residual": r}));
        }
        v["fredholm"] = json!(rows);
        let bi = m.boundary_integral()?;
        let limit = m.boundary_integral_limit();
        v["boundary_integral"] = json!({"quadrature": bi, "limit": limit});
        let ok = worst <= tol && (bi - limit).abs() <= 10.0 * tol;
        return check(ok, || format!("Fredholm residual {worst:e} or boundary routes exceed {tol:e}"), v);
    }
    if a.dimension {
        let formula = effective_dimension(a.lambda)?;
        let empirical = m.empirical_dimension()?;
        v["dimension"] = json!({"formula": formula, "log_slope_estimate": empirical});
        let diff = (formula - empirical).abs();
        return check(diff <= 0.05, || format!("slope estimate differs by {diff}"), v);
    }
    if let Some(ab) = &a.g2 {
        v["a"] = json!(ab[0]);
        v["b"] = json!(ab[1]);
        v["order"] = json!(a.order);
        v["g2"] = json!(g2_perturbative(ab[0], ab[1], a.lambda, a.order)?);
        return Ok(Output::Json(v));
    }
    Ok(Output::Json(v))
}
