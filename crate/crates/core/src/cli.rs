//! The `latkit` command line. Exit codes: 0 success, 1 counterexample or
//! invalid structure, 2 usage or parse error.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classes::{classify, ElementClass, SWEEP_CLASSES};
use crate::dot::{lattice_dot, space_dot};
use crate::enumerate::enumerate_lattices;
use crate::harness::{run_corpus, run_items, CorpusItem, CorpusSpec, TheoremId};
use crate::hom::LatticeHom;
use crate::latfile::{parse_homfile, parse_latfile, serialize_lattice, LatFile};
use crate::lattice::MultLattice;
use crate::topology::LowerSpace;
use crate::verdict::Verdict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "latkit", version, about = "Finite multiplicative lattices and their lower spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check that a .lat file describes a commutative unital quantale
    Validate { file: PathBuf },
    /// List the elements of a class
    Classify {
        file: PathBuf,
        #[arg(long)]
        class: String,
    },
    /// Properties of the lower space on a class
    Topology {
        file: PathBuf,
        #[arg(long)]
        sigma: String,
    },
    /// Run theorem checks on one file or on a corpus
    Check {
        #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
        file: Option<PathBuf>,
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, default_value = "all")]
        theorems: String,
    },
    /// Validate a homomorphism and check the induced map
    Hom {
        source: PathBuf,
        target: PathBuf,
        homfile: PathBuf,
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value_t = HomCheck::All)]
        check: HomCheck,
    },
    /// Enumerate all quantales up to a size
    Enumerate {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz output of the Hasse diagram or of a lower space
    Dot {
        file: PathBuf,
        #[arg(long)]
        sigma: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HomCheck {
    Continuity,
    Embedding,
    Density,
    All,
}

/// Failure of a subcommand, carrying its exit code.
struct Exit(i32, String);

fn usage(msg: impl std::fmt::Display) -> Exit {
    Exit(EXIT_USAGE, msg.to_string())
}

fn fail(msg: impl std::fmt::Display) -> Exit {
    Exit(EXIT_FAIL, msg.to_string())
}

fn read_latfile(path: &Path) -> Result<LatFile, Exit> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_latfile(&text).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn load(path: &Path) -> Result<(MultLattice, LatFile), Exit> {
    let f = read_latfile(path)?;
    let l = f.to_lattice().map_err(|e| fail(format!("{}: invalid lattice: {e}", path.display())))?;
    Ok((l, f))
}

fn class_arg(token: &str, f: &LatFile) -> Result<ElementClass, Exit> {
    ElementClass::parse_with(token, &f.custom_classes()).map_err(usage)
}

fn verdict_line(out: &mut String, what: &str, v: &Verdict) {
    out.push_str(&format!("{what}: {v}\n"));
}

/// Runs the command line `argv` (including the program name), writing to
/// standard output and standard error, and returns the exit status.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.cmd) {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(Exit(code, msg)) => {
            eprintln!("latkit: {msg}");
            code
        }
    }
}

fn run(cmd: Cmd) -> Result<(String, i32), Exit> {
    match cmd {
        Cmd::Validate { file } => {
            let (l, f) = load(&file)?;
            Ok((format!("valid: {} elements, {} custom classes\n", l.len(), f.sigmas.len()), EXIT_OK))
        }
        Cmd::Classify { file, class } => {
            let (l, f) = load(&file)?;
            let c = class_arg(&class, &f)?;
            let set = classify(&l, &c);
            let idx: Vec<String> = set.iter().map(|i| i.to_string()).collect();
            Ok((format!("{c}: {}\nindices: {}\n", l.format_set(set), idx.join(" ")), EXIT_OK))
        }
        Cmd::Topology { file, sigma } => {
            let (l, f) = load(&file)?;
            let c = class_arg(&sigma, &f)?;
            topology_report(&l, &c).map(|t| (t, EXIT_OK))
        }
        Cmd::Check { file, corpus, theorems } => {
            let ids = TheoremId::parse_list(&theorems).map_err(usage)?;
            let report = match (file, corpus) {
                (_, Some(spec)) => {
                    let spec: CorpusSpec = spec.parse().map_err(usage)?;
                    run_corpus(&spec, &ids).map_err(usage)?
                }
                (Some(path), None) => {
                    let (l, f) = load(&path)?;
                    let mut classes = SWEEP_CLASSES.to_vec();
                    classes.extend(f.custom_classes().into_iter().map(|(n, s)| ElementClass::Custom(n, s)));
                    let label = path.file_name().map_or("input".into(), |n| n.to_string_lossy().into_owned());
                    let item = CorpusItem::Lattice { label: label.clone(), lattice: l, classes };
                    run_items(&label, &[item], &ids).map_err(fail)?
                }
                (None, None) => return Err(usage("check needs a file or --corpus")),
            };
            let code = report.exit_code();
            Ok((report.serialize(), code))
        }
        Cmd::Hom { source, target, homfile, class, check } => {
            let (s, sf) = load(&source)?;
            let (t, _) = load(&target)?;
            let c = class_arg(&class, &sf)?;
            let text = fs::read_to_string(&homfile).map_err(|e| usage(format!("{}: {e}", homfile.display())))?;
            let map = parse_homfile(&text, s.len(), t.len()).map_err(|e| usage(format!("{}:{e}", homfile.display())))?;
            let h = LatticeHom::validate(&s, &t, map).map_err(|e| fail(format!("invalid homomorphism: {e}")))?;
            hom_report(&h, &c, check)
        }
        Cmd::Enumerate { max_size, out } => {
            let all = enumerate_lattices(max_size).map_err(usage)?;
            let mut text = String::new();
            for n in 1..=max_size {
                let count = all.iter().filter(|l| l.len() == n).count();
                text.push_str(&format!("size {n}: {count}\n"));
            }
            text.push_str(&format!("total: {}\n", all.len()));
            if let Some(dir) = out {
                fs::create_dir_all(&dir).map_err(|e| fail(format!("{}: {e}", dir.display())))?;
                let mut k_by_size = vec![0usize; max_size + 1];
                for l in &all {
                    let k = k_by_size[l.len()];
                    k_by_size[l.len()] += 1;
                    let path = dir.join(format!("q{}_{k:03}.lat", l.len()));
                    fs::write(&path, serialize_lattice(l)).map_err(|e| fail(format!("{}: {e}", path.display())))?;
                }
                text.push_str(&format!("wrote {} files to {}\n", all.len(), dir.display()));
            }
            Ok((text, EXIT_OK))
        }
        Cmd::Dot { file, sigma } => {
            let (l, f) = load(&file)?;
            let text = match sigma {
                None => lattice_dot(&l),
                Some(tok) => {
                    let c = class_arg(&tok, &f)?;
                    space_dot(&LowerSpace::for_class(&l, &c)).map_err(fail)?
                }
            };
            Ok((text, EXIT_OK))
        }
    }
}

fn topology_report(l: &MultLattice, c: &ElementClass) -> Result<String, Exit> {
    let s = LowerSpace::for_class(l, c);
    let closed = s.closed_sets().map_err(fail)?.len();
    let mut out = format!(
        "sigma {c}: {}\n|sigma| = {}\n|subbasis| = {}\n|closed_sets| = {closed}\n",
        l.format_set(s.sigma()),
        s.sigma().len(),
        s.subbasis().len()
    );
    let t = |r: Result<Verdict, crate::error::TopologyError>| r.map_err(fail);
    verdict_line(&mut out, "closed-topology", &s.forms_closed_topology());
    verdict_line(&mut out, "hkp", &s.hkp_property());
    verdict_line(&mut out, "t0", &t(s.is_t0())?);
    verdict_line(&mut out, "t1", &t(s.is_t1())?);
    verdict_line(&mut out, "sober", &t(s.is_sober())?);
    verdict_line(&mut out, "sober-criterion", &t(s.sober_criterion())?);
    verdict_line(&mut out, "compact", &s.is_compact_space());
    verdict_line(&mut out, "connected", &t(s.is_connected())?);
    verdict_line(&mut out, "strongly-disconnects", &s.strongly_disconnects());
    verdict_line(&mut out, "strongly-disconnects-by-unions", &s.strongly_disconnects_by_unions());
    verdict_line(&mut out, "spectral", &t(s.is_spectral())?);
    Ok(out)
}

fn hom_report(h: &LatticeHom, c: &ElementClass, what: HomCheck) -> Result<(String, i32), Exit> {
    let mut out = String::new();
    let (s, t) = (h.source(), h.target());
    out.push_str(&format!("kernel: {} (element {})\n", s.format_set(h.kernel_set()), s.name(h.kernel_element())));
    out.push_str(&format!("surjective: {}\n", h.is_surjective()));
    let cp = h.has_contraction_property(c);
    verdict_line(&mut out, &format!("contraction-property {c}"), &cp);
    if !cp.is_holds() {
        return Ok((out, EXIT_FAIL));
    }
    let induced = h.induced_map(c).map_err(fail)?;
    let pairs: Vec<String> = induced.iter().map(|&(y, x)| format!("{}->{}", t.name(y), s.name(x))).collect();
    out.push_str(&format!("induced: {}\n", pairs.join(" ")));
    let mut code = EXIT_OK;
    let mut run = |name: &str, v: Result<Verdict, crate::error::HomError>| -> Result<(), Exit> {
        let v = match v {
            Ok(v) => v,
            Err(e @ crate::error::HomError::NotSurjective { .. }) => {
                out.push_str(&format!("{name}: skipped ({e})\n"));
                return Ok(());
            }
            Err(e) => return Err(fail(e)),
        };
        if v.is_counterexample() {
            code = EXIT_FAIL;
        }
        verdict_line(&mut out, name, &v);
        Ok(())
    };
    if matches!(what, HomCheck::Continuity | HomCheck::All) {
        run("continuity", h.check_continuity(c))?;
    }
    if matches!(what, HomCheck::Embedding | HomCheck::All) {
        run("embedding", h.check_embedding(c))?;
    }
    if matches!(what, HomCheck::Density | HomCheck::All) {
        run("density", h.check_density(c))?;
    }
    Ok((out, code))
}
