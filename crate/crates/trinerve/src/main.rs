//! Batch front-end: build simplicial sets, validate Postnikov data,
//! compute homology, compare complexes, and run Kan checks.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use trinerve::cat::nerve as cat_nerve;
use trinerve::cocycle::{is_z3_category, is_z_group_twisted, CochainBase};
use trinerve::emac::{
    build_m, lambda5_horns_fill, minimal_homotopy_groups, validate_h, validate_t,
};
use trinerve::error::Error;
use trinerve::highercat::{diag_triple_nerve, geometric_nerve_3};
use trinerve::homology::{homology, Coeff};
use trinerve::json::{CochainJson, NerveInput, PostnikovJson};
use trinerve::postnikov::{bicat_nerve, bicatgroup_homotopy, coherence_check, phi, realize};
use trinerve::simplicial::{
    is_iso_up_to, kan_horn_check, read_ssx, verify_simplicial_map, write_ssx, Budget, HornMode,
    TruncSSet,
};

#[derive(Parser)]
#[command(name = "trinerve", about = "Nerves, twisted complexes, and homology at desk scale")]
struct Cli {
    /// Per-dimension simplex budget (flag > TRINERVE_BUDGET env > default 2^24).
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a nerve from a category / 2-category / 3-category description.
    Nerve(NerveArgs),
    /// Validate Postnikov data and run the realization pipeline.
    Postnikov(PostnikovArgs),
    /// Check the cocycle condition of a normalized cochain.
    CocycleCheck { input: PathBuf },
    /// Homology of an SSX file.
    Homology(HomologyArgs),
    /// Compare the homology of two SSX files.
    Compare(CompareArgs),
    /// Kan horn check on an SSX file.
    Kan(KanArgs),
}

#[derive(Args)]
struct NerveArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    kind: NerveKind,
    #[arg(long, default_value_t = 3)]
    trunc: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum NerveKind {
    Nerve,
    Duskin,
    Geometric3,
    DiagTriple,
}

#[derive(Args)]
struct PostnikovArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = VerifyLevel::Basic)]
    verify: VerifyLevel,
    /// Truncation for the built complexes (at most 4 for the comparison).
    #[arg(long, default_value_t = 4)]
    trunc: usize,
    /// Write the twisted complex to this SSX path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the nerve of the bicategorical group to this SSX path.
    #[arg(long)]
    out_nerve: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum VerifyLevel {
    Basic,
    Full,
}

#[derive(Args)]
struct HomologyArgs {
    input: PathBuf,
    /// Degrees as a:b (inclusive) or a comma list.
    #[arg(long, default_value = "0:3")]
    degrees: String,
    #[arg(long, default_value = "z")]
    coeff: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    a: PathBuf,
    b: PathBuf,
    #[arg(long, default_value = "0:3")]
    degrees: String,
    #[arg(long, default_value = "z")]
    coeff: String,
}

#[derive(Args)]
struct KanArgs {
    input: PathBuf,
    #[arg(long)]
    n: usize,
    /// A horn index, or "all".
    #[arg(long, default_value = "all")]
    k: String,
    /// Sample this many horns instead of exhausting them.
    #[arg(long)]
    sample: Option<usize>,
    /// Seed for sampling (required with --sample).
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match cli.budget {
        Some(b) => Budget::new(b),
        None => match std::env::var("TRINERVE_BUDGET") {
            Ok(v) => match v.parse() {
                Ok(b) => Budget::new(b),
                Err(_) => {
                    eprintln!("error: TRINERVE_BUDGET is not a number");
                    return ExitCode::from(2);
                }
            },
            Err(_) => Budget::default(),
        },
    };
    match run(cli.command, budget) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Budget { .. } => 3,
                Error::Precondition(_) => 1,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn parse_degrees(text: &str) -> Result<Vec<usize>, Error> {
    if let Some((a, b)) = text.split_once(':') {
        let a: usize = a.trim().parse().map_err(|_| Error::structure("bad degree range"))?;
        let b: usize = b.trim().parse().map_err(|_| Error::structure("bad degree range"))?;
        if b < a {
            return Err(Error::structure("empty degree range"));
        }
        Ok((a..=b).collect())
    } else {
        text.split(',')
            .map(|s| s.trim().parse().map_err(|_| Error::structure("bad degree list")))
            .collect()
    }
}

fn parse_coeff(text: &str) -> Result<Coeff, Error> {
    match text {
        "z" => Ok(Coeff::Z),
        "q" => Ok(Coeff::Q),
        other => match other.strip_prefix("zp:") {
            Some(p) => {
                Ok(Coeff::Zp(p.parse().map_err(|_| Error::structure("bad prime in coeff"))?))
            }
            None => Err(Error::structure("coeff must be z, q, or zp:<p>")),
        },
    }
}

fn run(command: Command, budget: Budget) -> Result<u8, Error> {
    match command {
        Command::Nerve(args) => {
            let text = std::fs::read_to_string(&args.input)?;
            let input: NerveInput = serde_json::from_str(&text)?;
            let t3 = input.into_3cat()?;
            let x: TruncSSet = match args.kind {
                NerveKind::Nerve => {
                    let c = t3.as_category().ok_or_else(|| {
                        Error::structure("kind=nerve needs a category (identity 2- and 3-cells)")
                    })?;
                    cat_nerve(&c, args.trunc, budget)?
                }
                NerveKind::Duskin => {
                    if !t3.has_identity_3_cells() {
                        return Err(Error::structure(
                            "kind=duskin needs a 2-category (identity 3-cells)",
                        ));
                    }
                    geometric_nerve_3(&t3, args.trunc, budget)?
                }
                NerveKind::Geometric3 => geometric_nerve_3(&t3, args.trunc, budget)?,
                NerveKind::DiagTriple => diag_triple_nerve(&t3, args.trunc, budget)?,
            };
            let violations = x.check_simplicial_identities();
            let carriers: Vec<usize> =
                (0..=x.trunc()).map(|d| x.all_simplices_at(d).len()).collect();
            println!(
                "{}",
                json!({
                    "nondegenerate": x.counts(),
                    "carriers": carriers,
                    "identity_violations": violations.len(),
                })
            );
            if let Some(out) = &args.out {
                std::fs::write(out, write_ssx(&x)?)?;
                println!("wrote {}", out.display());
            }
            Ok(if violations.is_empty() { 0 } else { 1 })
        }
        Command::Postnikov(args) => {
            let text = std::fs::read_to_string(&args.input)?;
            let input: PostnikovJson = serde_json::from_str(&text)?;
            let p = input.into_data()?;
            let h_ok = validate_h(&p, budget)?;
            let t_ok = h_ok && validate_t(&p, budget)?;
            if !h_ok || !t_ok {
                println!("{}", json!({ "h_valid": h_ok, "t_valid": t_ok }));
                println!("verification FAILED");
                return Ok(1);
            }
            let m = build_m(&p, args.trunc.min(4), budget)?;
            let bg = realize(&p, budget)?;
            let nerve = bicat_nerve(&bg, args.trunc.min(4), budget)?;
            let f = phi(&bg, &nerve, &m)?;
            let depth = nerve.trunc().min(4);
            let phi_commutes = verify_simplicial_map(&f, &nerve, &m, depth)?.passes();
            let phi_iso = phi_commutes && is_iso_up_to(&f, &nerve, &m, depth)?;
            let identities = m.check_simplicial_identities().is_empty()
                && nerve.check_simplicial_identities().is_empty();
            let pis = minimal_homotopy_groups(&m, 3)?;
            let (p1, p2, p3) = bicatgroup_homotopy(&bg)?;
            let homotopy_match = pis[0].order == p1.order()
                && pis[1].order == p2.order()
                && pis[2].order == p3.order();
            let mut kan_ok = true;
            let mut coherence_ok = true;
            if args.verify == VerifyLevel::Full {
                for n in 2..=depth {
                    for k in 0..=n {
                        let r = kan_horn_check(&m, n, k, HornMode::Exhaustive)?;
                        kan_ok &= r.all_fillable();
                    }
                }
                let lam = lambda5_horns_fill(&p, budget, true)?;
                kan_ok &= lam.unfillable == 0;
                coherence_ok = coherence_check(&bg)?.passes();
            }
            println!(
                "{}",
                json!({
                    "h_valid": h_ok,
                    "t_valid": t_ok,
                    "identities": identities,
                    "phi_iso": phi_iso,
                    "kan": kan_ok,
                    "coherence": coherence_ok,
                    "homotopy_groups": {
                        "pi1": pis[0].order,
                        "pi2": pis[1].order,
                        "pi3": pis[2].order,
                        "matches_realization": homotopy_match,
                    },
                })
            );
            if let Some(out) = &args.out {
                std::fs::write(out, write_ssx(&m)?)?;
            }
            if let Some(out) = &args.out_nerve {
                std::fs::write(out, write_ssx(&nerve)?)?;
            }
            let ok = identities && phi_iso && kan_ok && coherence_ok && homotopy_match;
            println!("verification {}", if ok { "passed" } else { "FAILED" });
            Ok(if ok { 0 } else { 1 })
        }
        Command::CocycleCheck { input } => {
            let text = std::fs::read_to_string(&input)?;
            let j: CochainJson = serde_json::from_str(&text)?;
            let (c, module) = j.into_parts()?;
            let ok = match (&c.base, module) {
                (CochainBase::Category(cat), _) => {
                    let cat = cat.clone();
                    let coeff = c.coeff.clone();
                    is_z3_category(&cat, &coeff, &c)?
                }
                (CochainBase::Group(_), Some(m)) => is_z_group_twisted(&m, c.degree, &c)?,
                (CochainBase::Group(_), None) => unreachable!("group bases always get a module"),
            };
            println!("{}", json!({ "cocycle": ok }));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Homology(args) => {
            let x = read_ssx(&std::fs::read_to_string(&args.input)?)?;
            let degrees = parse_degrees(&args.degrees)?;
            let coeff = parse_coeff(&args.coeff)?;
            let h = homology(&x, &degrees, coeff)?;
            for g in &h.groups {
                println!(
                    "H_{} = betti {} torsion {:?} ({})",
                    g.degree, g.betti, g.torsion, g.coeff
                );
            }
            if let Some(out) = &args.out {
                std::fs::write(out, serde_json::to_string_pretty(&h)?)?;
            }
            Ok(0)
        }
        Command::Compare(args) => {
            let xa = read_ssx(&std::fs::read_to_string(&args.a)?)?;
            let xb = read_ssx(&std::fs::read_to_string(&args.b)?)?;
            let degrees = parse_degrees(&args.degrees)?;
            let coeff = parse_coeff(&args.coeff)?;
            let ha = homology(&xa, &degrees, coeff)?;
            let hb = homology(&xb, &degrees, coeff)?;
            let mut equal = true;
            for (ga, gb) in ha.groups.iter().zip(&hb.groups) {
                let same = ga.betti == gb.betti && ga.torsion == gb.torsion;
                equal &= same;
                println!(
                    "degree {}: {} (betti {} vs {}, torsion {:?} vs {:?})",
                    ga.degree,
                    if same { "equal" } else { "UNEQUAL" },
                    ga.betti,
                    gb.betti,
                    ga.torsion,
                    gb.torsion
                );
            }
            println!("{}", json!({ "equal": equal }));
            Ok(if equal { 0 } else { 1 })
        }
        Command::Kan(args) => {
            let x = read_ssx(&std::fs::read_to_string(&args.input)?)?;
            let mode = match (args.sample, args.seed) {
                (Some(count), Some(seed)) => HornMode::Sample { count, seed },
                (Some(_), None) => return Err(Error::structure("--sample requires --seed")),
                (None, _) => HornMode::Exhaustive,
            };
            let ks: Vec<usize> = if args.k == "all" {
                (0..=args.n).collect()
            } else {
                vec![args.k.parse().map_err(|_| Error::structure("bad horn index"))?]
            };
            let mut all_ok = true;
            for k in ks {
                let r = kan_horn_check(&x, args.n, k, mode)?;
                all_ok &= r.all_fillable();
                println!(
                    "horn ({}, {}): tested {}, fillable {}, unique fillers {}",
                    args.n, k, r.horns_tested, r.fillable, r.unique_fillers
                );
            }
            println!("{}", json!({ "kan": all_ok }));
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}
