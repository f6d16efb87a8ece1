use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use modunits::cusps::{cusp_list_gamma1, cusp_list_gamma_upper1};
use modunits::generators::{
    cusp_value_set, express_in_generators, fricke_family_component, hauptmodul_series, minpoly_set,
    uniform_pole_profile, HauptmodulData, PoleProfile,
};
use modunits::modfunc::{
    fricke, modularity_criterion, siegel, verify_fricke_siegel, weierstrass_unit,
};
use modunits::{Cusp, Error, PuiseuxSeries, RationalVector, SiegelProduct, Variant};

#[derive(Parser)]
#[command(
    name = "modunits",
    version,
    about = "Exact q-expansions and generators for modular curves of genus zero"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Powers of q kept past the leading term.
    #[arg(long, global = true, default_value_t = 60)]
    prec: i64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// q-expansion of the Siegel function g_r.
    SiegelExpand {
        #[arg(long)]
        r: RationalVector,
    },
    /// q-expansion of the Fricke function f_r.
    FrickeExpand {
        #[arg(long)]
        r: RationalVector,
    },
    /// q-expansion of the hauptmodul of level N.
    Hauptmodul {
        #[arg(long)]
        level: u64,
        /// gamma1 or gamma-upper1
        #[arg(long, default_value = "gamma1")]
        variant: Variant,
    },
    /// Inequivalent cusps.
    Cusps {
        #[arg(long)]
        level: u64,
        #[arg(long, default_value = "gamma1")]
        variant: Variant,
    },
    /// Values of the hauptmodul of X^1(N) at its finite cusps.
    CuspValues {
        #[arg(long)]
        level: u64,
    },
    /// Minimal polynomials of the cusp values.
    Minpolys {
        #[arg(long)]
        level: u64,
    },
    /// The unit (f_[1/N,0] - f_[1/m,0]) / (f_[2/m,0] - f_[1/m,0]).
    WeierstrassUnit {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        level: i64,
    },
    /// Check f_r - f_s against its Siegel product form.
    VerifyIdentity {
        #[arg(long)]
        r: RationalVector,
        #[arg(long)]
        s: RationalVector,
    },
    /// Run the level N congruences on a Siegel product.
    VerifyCriterion {
        #[arg(long)]
        level: u64,
        /// Factor `a/b,c/d:e` for g_[a/b,c/d]^e; repeatable. Defaults to the
        /// hauptmodul of the level.
        #[arg(long = "factor")]
        factors: Vec<String>,
    },
    /// Write a series as a rational function of the hauptmodul.
    Express {
        #[arg(long)]
        level: u64,
        #[arg(long, default_value = "gamma1")]
        variant: Variant,
        /// JSON series file, or `-` for standard input.
        #[arg(long)]
        series: String,
        /// Assume this pole order at every finite cusp.
        #[arg(long, default_value_t = 0)]
        pole_order: u32,
        /// Pole order at one cusp, as `cusp:k`; repeatable.
        #[arg(long = "pole")]
        poles: Vec<String>,
    },
    /// The pair of series attached to r by the Fricke family of level N.
    FrickeFamily {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: RationalVector,
    },
}

struct Output {
    text: String,
    json: Value,
}

fn series_output(s: &PuiseuxSeries) -> Output {
    Output {
        text: s.to_string(),
        json: s.to_json(),
    }
}

fn parse_factor(s: &str) -> modunits::Result<(RationalVector, i64)> {
    let bad = || Error::Parse(format!("bad factor {:?}, expected a/b,c/d:e", s));
    let (r, e) = s.rsplit_once(':').ok_or_else(bad)?;
    Ok((r.parse()?, e.trim().parse().map_err(|_| bad())?))
}

fn parse_pole(s: &str) -> modunits::Result<(Cusp, u32)> {
    let bad = || Error::Parse(format!("bad pole {:?}, expected cusp:k", s));
    let (c, k) = s.rsplit_once(':').ok_or_else(bad)?;
    Ok((c.parse()?, k.trim().parse().map_err(|_| bad())?))
}

fn read_series(path: &str) -> modunits::Result<PuiseuxSeries> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(e.to_string()))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path, e)))?
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    PuiseuxSeries::from_json(&value)
}

fn run(cli: &Cli) -> modunits::Result<Output> {
    let prec = cli.prec;
    Ok(match &cli.command {
        Command::SiegelExpand { r } => series_output(&siegel(r, prec)?),
        Command::FrickeExpand { r } => series_output(&fricke(r, prec)?),
        Command::Hauptmodul { level, variant } => {
            series_output(&hauptmodul_series(*level, *variant, prec)?)
        }
        Command::Cusps { level, variant } => {
            HauptmodulData::for_level(*level)?;
            let list = match variant {
                Variant::Gamma1 => cusp_list_gamma1(*level),
                Variant::GammaUpper1 => cusp_list_gamma_upper1(*level),
            };
            let names: Vec<String> = list.iter().map(|c| c.to_string()).collect();
            Output {
                text: names.join("\n"),
                json: json!({ "level": level, "variant": variant.to_string(), "cusps": names }),
            }
        }
        Command::CuspValues { level } => {
            let set = cusp_value_set(*level)?;
            let text = set
                .values
                .iter()
                .map(|(s, v)| format!("{}\t{}", s, v))
                .collect::<Vec<_>>()
                .join("\n");
            let values: Vec<Value> = set
                .values
                .iter()
                .map(|(s, v)| {
                    let (conductor, coords) = v.to_json_parts();
                    json!({ "cusp": s.to_string(), "value": v.to_string(), "conductor": conductor, "coords": coords })
                })
                .collect();
            Output {
                text,
                json: json!({ "level": level, "values": values }),
            }
        }
        Command::Minpolys { level } => {
            let polys = minpoly_set(*level)?;
            Output {
                text: polys
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join("\n"),
                json: json!({
                    "level": level,
                    "minpolys": polys
                        .iter()
                        .map(|p| p.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                }),
            }
        }
        Command::WeierstrassUnit { m, level } => {
            series_output(&weierstrass_unit(*m, *level, prec)?)
        }
        Command::VerifyIdentity { r, s } => {
            let ok = verify_fricke_siegel(r, s, prec)?;
            if !ok {
                return Err(Error::Invariant(format!(
                    "f_{} - f_{} differs from its Siegel product form",
                    r, s
                )));
            }
            Output {
                text: "OK".into(),
                json: json!({ "r": r.to_string(), "s": s.to_string(), "prec": prec, "ok": true }),
            }
        }
        Command::VerifyCriterion { level, factors } => {
            let p = if factors.is_empty() {
                HauptmodulData::for_level(*level)?.product()
            } else {
                let parsed = factors
                    .iter()
                    .map(|f| parse_factor(f))
                    .collect::<modunits::Result<Vec<_>>>()?;
                SiegelProduct::new(*level, parsed)?
            };
            let report = modularity_criterion(&p);
            let mut text = format!("{}: {}", p, if report.holds { "holds" } else { "fails" });
            for f in &report.failures {
                text.push_str("\n  ");
                text.push_str(f);
            }
            Output {
                text,
                json: json!({
                    "level": level,
                    "product": p.to_string(),
                    "holds": report.holds,
                    "failures": report.failures,
                }),
            }
        }
        Command::Express {
            level,
            variant,
            series,
            pole_order,
            poles,
        } => {
            let h = read_series(series)?;
            let mut profile: PoleProfile = uniform_pole_profile(*level, *variant, *pole_order);
            for p in poles {
                let (c, k) = parse_pole(p)?;
                profile.insert(c, k);
            }
            let e = express_in_generators(&h, *level, *variant, &profile)?;
            Output {
                text: e.to_string(),
                json: e.to_json(),
            }
        }
        Command::FrickeFamily { level, m, r } => {
            let (g, f) = fricke_family_component(*level, *m, r, prec)?;
            Output {
                text: format!("g: {}\nf: {}", g, f),
                json: json!({ "level": level, "m": m, "r": r.to_string(), "g": g.to_json(), "f": f.to_json() }),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(if e.is_precision() { 2 } else { 1 })
        }
    }
}
