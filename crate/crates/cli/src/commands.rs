use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use deltabound::model::{self, ModelSolution, PhysicalParams};
use deltabound::numerics::Execution;
use deltabound::oracle::{self, Grid, OracleOptions};

use crate::plot;
use crate::{CompareArgs, OracleArgs, PlotArgs, SolveArgs, SweepArgs};

pub const CSV_HEADER: [&str; 3] = ["x", "k", "energy"];

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn fixed(v: f64) -> String {
    format!("{v:.6}")
}

fn write_table(out: Box<dyn Write>, rows: &[ModelSolution]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([fixed(r.x), fixed(r.k), fixed(r.energy)])?;
    }
    w.flush()?;
    Ok(())
}

/// `steps` evenly spaced points from `x_min` to `x_max` inclusive.
pub fn linspace(x_min: f64, x_max: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![x_min],
        _ => {
            let last = (steps - 1) as f64;
            (0..steps)
                .map(|i| {
                    if i + 1 == steps {
                        x_max
                    } else {
                        x_min + (x_max - x_min) * i as f64 / last
                    }
                })
                .collect()
        }
    }
}

fn check_range(x_min: f64, x_max: f64) -> Result<()> {
    if !(x_min.is_finite() && x_max.is_finite() && x_min > 0.0 && x_min <= x_max) {
        bail!("need 0 < x-min <= x-max, got x-min = {x_min}, x-max = {x_max}");
    }
    Ok(())
}

pub fn solve(args: &SolveArgs) -> Result<()> {
    let s = model::solve_k(args.x, args.tol)?;
    write_table(output(None)?, &[s])
}

pub fn sweep(args: &SweepArgs) -> Result<()> {
    check_range(args.x_min, args.x_max)?;
    if args.steps == 0 {
        bail!("steps must be at least 1");
    }
    let rows = model::sweep(&linspace(args.x_min, args.x_max, args.steps), args.tol)?;
    write_table(output(args.out.as_deref())?, &rows)
}

fn execution(parallel: bool) -> Execution {
    if parallel {
        Execution::Parallel
    } else {
        Execution::Sequential
    }
}

pub fn oracle(args: &OracleArgs) -> Result<()> {
    let grid = Grid::new(args.dim as usize, args.grid_n, args.half_length)?;
    let lambda = if args.dim == 1 { 0.0 } else { args.lambda };
    let params = PhysicalParams::atomic_with(args.alpha, lambda)?;
    let opts = OracleOptions {
        tol: args.tol,
        execution: execution(args.parallel),
        ..OracleOptions::default()
    };
    let result = oracle::solve_grid(&grid, &params, &opts)?;

    let mut out = output(args.out.as_deref())?;
    writeln!(out, "{}", result.to_json())?;
    out.flush()?;
    if let Some(path) = &args.wavefunction {
        let file =
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
        result.write_wavefunction(BufWriter::new(file))?;
    }
    Ok(())
}

pub fn compare(args: &CompareArgs) -> Result<()> {
    if args.steps > 0 {
        check_range(args.x_min, args.x_max)?;
    }
    let grid = Grid::new(2, args.grid_n, args.half_length)?;
    let params = PhysicalParams::atomic_with(1.0, args.lambda)?;
    let opts = OracleOptions {
        tol: args.tol,
        execution: execution(args.parallel),
        ..OracleOptions::default()
    };
    let xs = linspace(args.x_min, args.x_max, args.steps);
    let report = oracle::compare_model_oracle(&xs, &grid, &params, args.model_tol, &opts)?;

    let mut w = csv::Writer::from_writer(output(args.out.as_deref())?);
    w.write_record(["kind", "x", "lambda", "k", "energy", "delta"])?;
    for (row, delta) in report.model.iter().zip(report.model_minus_correlated()) {
        w.write_record([
            "model",
            &fixed(row.x),
            "",
            &fixed(row.k),
            &fixed(row.energy),
            &fixed(delta),
        ])?;
    }
    for o in [&report.uncorrelated, &report.correlated] {
        w.write_record([
            "oracle",
            "",
            &fixed(o.lambda),
            "",
            &fixed(o.energy),
            &format!("{:.3e}", o.residual),
        ])?;
    }
    w.flush()?;

    eprintln!(
        "grid: n = {}, box = {}, h = {:.6}",
        grid.n(),
        grid.half_length(),
        grid.spacing()
    );
    eprintln!(
        "oracle E(lambda=0) = {:.6}, model asymptote = {:.6}, difference = {:.6}",
        report.uncorrelated.energy,
        report.model_asymptote,
        report.uncorrelated_gap()
    );
    eprintln!(
        "oracle E(lambda={}) = {:.6}, correlation shift = {:.6}",
        report.correlated.lambda,
        report.correlated.energy,
        report.correlation_shift()
    );
    Ok(())
}

pub fn plot(args: &PlotArgs) -> Result<()> {
    let series = plot::read_series(&args.input, args.column)?;
    let rendered = match args.format {
        crate::PlotFormat::Svg => plot::render_svg(&series),
        crate::PlotFormat::Gnuplot => plot::render_gnuplot(&series),
    };
    let mut out = output(Some(&args.out))?;
    out.write_all(rendered.as_bytes())?;
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_endpoints() {
        assert_eq!(
            linspace(1.0, 10.0, 10),
            (1..=10).map(f64::from).collect::<Vec<_>>()
        );
        assert_eq!(linspace(2.0, 2.0, 1), vec![2.0]);
        assert_eq!(linspace(0.1, 0.7, 4).last(), Some(&0.7));
        assert!(linspace(1.0, 2.0, 0).is_empty());
    }

    #[test]
    fn range_validation() {
        assert!(check_range(0.0, 1.0).is_err());
        assert!(check_range(2.0, 1.0).is_err());
        assert!(check_range(1.0, 1.0).is_ok());
    }
}
