//! Command-line operations: determinant runs on JSON inputs, cost benches
//! and triple files.
//!
//! The binary in the `polydet-cli` crate only parses arguments; everything
//! it does lives here so that it can be tested without spawning processes.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{det_gauss, irreducible_poly, FiniteRing, PolyMatShape, PolyMatrix, Polynomial, PrimeField};
use crate::determinant::{det_polymat, Method};
use crate::engine::{derive_seed, run, CostReport, RunOutput};
use crate::error::{Error, Result};
use crate::sharing::Dealer;
use crate::triples::{verify_plain, TripleFile, TripleKind, TripleStore};

pub const DEFAULT_PLAYERS: usize = 3;
pub const DEFAULT_Q: u64 = 101;
pub const SEED_ENV: &str = "POLYDET_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_LEAK: i32 = 2;

/// A secret polynomial matrix as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixInputFile {
    pub q: u64,
    pub n: usize,
    pub d: usize,
    /// Row-major; each entry lists coefficients from the constant term up.
    pub entries: Vec<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, rename = "N", skip_serializing_if = "Option::is_none")]
    pub players: Option<usize>,
}

impl MatrixInputFile {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Input(format!("malformed input JSON: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn from_matrix(a: &PolyMatrix) -> Self {
        let n = a.dim();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| a.entry(i, j).coeff_values()).collect())
            .collect();
        MatrixInputFile { q: a.field().modulus(), n, d: a.d_bound(), entries, seed: None, players: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("input files serialize")
    }

    /// Checks every coefficient and degree, then builds the matrix.
    pub fn validate(&self) -> Result<PolyMatrix> {
        let field = PrimeField::new(self.q).map_err(|e| Error::Input(format!("q: {e}")))?;
        if self.n == 0 {
            return Err(Error::Input("n must be at least 1".into()));
        }
        if self.entries.len() != self.n {
            return Err(Error::Input(format!("expected {} rows, found {}", self.n, self.entries.len())));
        }
        let mut polys = Vec::with_capacity(self.n * self.n);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.n {
                return Err(Error::Input(format!("row {i} has {} entries, expected {}", row.len(), self.n)));
            }
            for (j, coeffs) in row.iter().enumerate() {
                if let Some((k, c)) = coeffs.iter().enumerate().find(|(_, &c)| c >= self.q) {
                    return Err(Error::Input(format!(
                        "entry ({i},{j}) coefficient {k} is {c}, outside [0, {})",
                        self.q
                    )));
                }
                let p = Polynomial::from_u64(field, coeffs);
                if p.degree() > self.d as isize {
                    return Err(Error::Input(format!(
                        "entry ({i},{j}) has degree {} but d = {}",
                        p.degree(),
                        self.d
                    )));
                }
                polys.push(p);
            }
        }
        PolyMatrix::from_entries(self.n, self.d, &polys)
    }
}

/// `POLYDET_SEED` beats `--seed`, which beats the seed in the input file.
pub fn resolve_seed(flag: Option<u64>, file: Option<u64>) -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(flag.or(file).unwrap_or(0)),
    }
}

pub fn exit_code(err: &Error) -> i32 {
    if err.is_leak() {
        EXIT_LEAK
    } else {
        EXIT_INPUT
    }
}

/// Machine-readable form of an error for stderr.
pub fn error_json(err: &Error) -> String {
    let kind = match err {
        Error::Domain(_) => "domain",
        Error::ProtocolBug(_) => "protocol_bug",
        Error::PreprocessingExhausted(_) => "preprocessing_exhausted",
        Error::TripleReuse(_) => "triple_reuse",
        Error::Leak(_) => "leak",
        Error::RetriesExhausted(_) => "retries_exhausted",
        Error::Correctness(_) => "correctness",
        Error::Checksum(_) => "checksum",
        Error::Input(_) => "input",
        Error::Io(_) => "io",
    };
    let mut obj = serde_json::json!({ "error": kind, "message": err.to_string(), "exit_code": exit_code(err) });
    if let Error::Leak(signal) = err {
        obj["signal"] = serde_json::Value::String(format!("{signal:?}").to_lowercase());
    }
    obj.to_string()
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut f = fs::File::create(path)?;
    f.write_all(bytes)?;
    Ok(())
}

#[derive(Clone, Debug)]
pub struct DetOptions {
    pub method: Method,
    pub input: PathBuf,
    pub players: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub costs: Option<PathBuf>,
    pub transcript: Option<PathBuf>,
    /// Preprocessed triples used before the dealer is asked for more.
    pub triples: Option<PathBuf>,
}

/// Result of one determinant run, ready to be written out.
#[derive(Clone, Debug)]
pub struct DetOutcome {
    pub det: Polynomial,
    pub report: CostReport,
    pub transcript_jsonl: String,
}

impl DetOutcome {
    pub fn det_json(&self) -> String {
        let mut coeffs = self.det.coeff_values();
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        serde_json::json!({ "det": coeffs }).to_string()
    }

    pub fn costs_csv(&self) -> String {
        format!("{}\n{}\n", CostReport::CSV_HEADER, self.report.csv_row())
    }
}

fn check_players(players: usize) -> Result<usize> {
    if players < 2 {
        return Err(Error::Input(format!("N = {players}: at least two players are required")));
    }
    Ok(players)
}

/// Shares `a` among the players and runs `method` on it.
pub fn run_det(
    method: Method,
    a: &PolyMatrix,
    players: usize,
    seed: u64,
    store: Option<TripleStore>,
) -> Result<RunOutput<Polynomial>> {
    let players = check_players(players)?;
    let shared = Dealer::new(seed).deal(a, players)?;
    run(players, a.field(), seed, store, |ctx| Ok(det_polymat(ctx, method, &shared)?.open()))
}

pub fn cmd_det(opts: &DetOptions) -> Result<DetOutcome> {
    let input = MatrixInputFile::read(&opts.input)?;
    let a = input.validate()?;
    let seed = resolve_seed(opts.seed, input.seed)?;
    let players = check_players(opts.players.or(input.players).unwrap_or(DEFAULT_PLAYERS))?;
    let store = match &opts.triples {
        None => None,
        Some(path) => {
            let file = TripleFile::read(fs::File::open(path)?)?;
            if file.q != a.field().modulus() || file.players != players {
                return Err(Error::Input(format!(
                    "triple file is for q = {}, N = {}; this run has q = {}, N = {players}",
                    file.q,
                    file.players,
                    a.field().modulus()
                )));
            }
            let mut store = TripleStore::dealer(a.field(), players, seed);
            for t in file.triples {
                store.push(file.kind.clone(), t)?;
            }
            Some(store)
        }
    };
    let out = run_det(opts.method, &a, players, seed, store)?;
    let outcome = DetOutcome {
        det: out.output,
        report: out.meter.report(opts.method.name()),
        transcript_jsonl: out.transcript.to_jsonl(),
    };
    match &opts.out {
        Some(p) => write_file(p, format!("{}\n", outcome.det_json()).as_bytes())?,
        None => println!("{}", outcome.det_json()),
    }
    if let Some(p) = &opts.costs {
        write_file(p, outcome.costs_csv().as_bytes())?;
    }
    if let Some(p) = &opts.transcript {
        write_file(p, outcome.transcript_jsonl.as_bytes())?;
    }
    Ok(outcome)
}

/// Parameter ranges of a bench.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BenchGrid {
    pub n: Vec<usize>,
    pub d: Vec<usize>,
    pub players: Vec<usize>,
}

impl BenchGrid {
    /// Parses `n=1..4 d=0..3 N=2,3,5`. Ranges are inclusive; a blank
    /// string is the empty grid and missing keys default to n=2, d=1, N=3.
    pub fn parse(spec: &str) -> Result<Self> {
        let tokens: Vec<&str> = spec.split_whitespace().collect();
        if tokens.is_empty() {
            return Ok(BenchGrid::default());
        }
        let mut keys: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for tok in tokens {
            let (key, values) = tok
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("grid term '{tok}' is not key=values")))?;
            if !["n", "d", "N"].contains(&key) {
                return Err(Error::Input(format!("unknown grid key '{key}' (expected n, d or N)")));
            }
            keys.insert(key, parse_values(values)?);
        }
        let mut take = |k: &str, default: usize| keys.remove(k).unwrap_or_else(|| vec![default]);
        Ok(BenchGrid { n: take("n", 2), d: take("d", 1), players: take("N", DEFAULT_PLAYERS) })
    }

    pub fn points(&self) -> Vec<(usize, usize, usize)> {
        let mut v = Vec::new();
        for &n in &self.n {
            for &d in &self.d {
                for &p in &self.players {
                    v.push((n, d, p));
                }
            }
        }
        v
    }
}

fn parse_values(s: &str) -> Result<Vec<usize>> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Input(format!("'{t}' is not a number")));
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => out.extend(num(lo)?..=num(hi)?),
            None => out.push(num(part)?),
        }
    }
    Ok(out)
}

/// One bench row: a cost report plus where it was measured.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub report: CostReport,
    pub n: usize,
    pub d: usize,
    pub players: usize,
    pub correct: bool,
    /// Whether every row of this method has the same round count.
    pub rounds_constant: bool,
}

pub const BENCH_HEADER: &str = "protocol,n,d,N,rounds,bits_per_player,triples_field,triples_series,triples_mat,triples_polymat,triples_extfield,field_ops,correct,rounds_constant";

impl BenchRow {
    pub fn csv_row(&self) -> String {
        let r = &self.report;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.protocol,
            self.n,
            self.d,
            self.players,
            r.rounds,
            r.bits_per_player,
            r.triples_field,
            r.triples_series,
            r.triples_mat,
            r.triples_polymat,
            r.triples_extfield,
            r.field_ops,
            self.correct,
            self.rounds_constant
        )
    }
}

/// Random matrix with invertible constant term, so that every method
/// accepts it.
pub fn bench_instance(field: PrimeField, n: usize, d: usize, seed: u64) -> PolyMatrix {
    let mut rng = ChaCha20Rng::from_seed(derive_seed(seed, 0, &format!("bench/n={n}/d={d}")));
    let shape = PolyMatShape { field, n, d };
    loop {
        let a = PolyMatrix::random(&shape, &mut rng);
        if !det_gauss(&a.eval(field.zero())).is_zero() {
            return a;
        }
    }
}

pub fn cmd_bench(grid: &BenchGrid, q: u64, seed: u64, methods: &[Method]) -> Result<Vec<BenchRow>> {
    let field = PrimeField::new(q).map_err(|e| Error::Input(format!("q: {e}")))?;
    let mut rows = Vec::new();
    for &method in methods {
        for (n, d, players) in grid.points() {
            if n == 0 {
                return Err(Error::Input("grid n values must be at least 1".into()));
            }
            let a = bench_instance(field, n, d, seed);
            let out = run_det(method, &a, players, seed, None)?;
            rows.push(BenchRow {
                report: out.meter.report(method.name()),
                n,
                d,
                players,
                correct: out.output == crate::algebra::det_reference_polymat(&a),
                rounds_constant: true,
            });
        }
    }
    for &method in methods {
        let rounds: Vec<u64> =
            rows.iter().filter(|r| r.report.protocol == method.name()).map(|r| r.report.rounds).collect();
        let constant = rounds.windows(2).all(|w| w[0] == w[1]);
        for r in rows.iter_mut().filter(|r| r.report.protocol == method.name()) {
            r.rounds_constant = constant;
        }
    }
    Ok(rows)
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut s = format!("{BENCH_HEADER}\n");
    for r in rows {
        s.push_str(&r.csv_row());
        s.push('\n');
    }
    s
}

/// Parses a kind name and `key=value` parameters such as `n=2,d=1`.
/// Extension-field kinds take `k`, the degree of a random irreducible
/// modulus drawn from `seed`.
pub fn parse_kind(kind: &str, params: &str, field: PrimeField, seed: u64) -> Result<TripleKind> {
    let mut map = BTreeMap::new();
    for part in params.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()) {
        let (k, v) =
            part.split_once('=').ok_or_else(|| Error::Input(format!("parameter '{part}' is not key=value")))?;
        let v: usize = v.parse().map_err(|_| Error::Input(format!("parameter {k}='{v}' is not a number")))?;
        map.insert(k.to_string(), v);
    }
    let get = |k: &str| map.get(k).copied().ok_or_else(|| Error::Input(format!("kind {kind} needs parameter {k}")));
    let positive = |k: &str| {
        get(k).and_then(|v| if v == 0 { Err(Error::Input(format!("parameter {k} must be positive"))) } else { Ok(v) })
    };
    Ok(match kind {
        "field" => TripleKind::Field,
        "series" => TripleKind::Series { m: positive("m")? },
        "matrix" => TripleKind::Matrix { n: positive("n")? },
        "polymatrix" => TripleKind::PolyMatrix { n: positive("n")?, d: get("d")? },
        "extfield" => {
            let k = positive("k")?;
            let mut rng = ChaCha20Rng::from_seed(derive_seed(seed, 0, "triples/modulus"));
            TripleKind::ExtField { modulus: irreducible_poly(field, k, &mut rng).coeff_values() }
        }
        other => {
            return Err(Error::Input(format!(
                "unknown kind '{other}' (expected field, series, matrix, polymatrix or extfield)"
            )))
        }
    })
}

/// Deals `count` triples of `kind` and returns the file contents.
pub fn generate_triples(kind: &TripleKind, field: PrimeField, players: usize, count: usize, seed: u64) -> Result<TripleFile> {
    let players = check_players(players)?;
    let mut store = TripleStore::dealer(field, players, seed);
    store.preload(kind, count)?;
    let raw = store.drain(kind);
    Ok(TripleFile::from_raw(field, players, kind.clone(), &raw))
}

pub fn cmd_triples_gen(kind: &TripleKind, field: PrimeField, players: usize, count: usize, seed: u64, out: &Path) -> Result<TripleFile> {
    let file = generate_triples(kind, field, players, count, seed)?;
    write_file(out, &file.to_bytes())?;
    Ok(file)
}

/// Summary printed by `triples inspect`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inspection {
    pub q: u64,
    #[serde(rename = "N")]
    pub players: usize,
    pub kind: String,
    pub count: usize,
    pub verified: usize,
}

impl Inspection {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summaries serialize")
    }
}

pub fn inspect_bytes(bytes: &[u8]) -> Result<Inspection> {
    let file = TripleFile::from_bytes(bytes)?;
    let field = PrimeField::new(file.q).map_err(|e| Error::Checksum(format!("bad modulus: {e}")))?;
    let mut verified = 0;
    for (i, t) in file.triples.iter().enumerate() {
        if !verify_plain(&file.kind, field, t)? {
            return Err(Error::Correctness(format!("triple {i} does not satisfy x = y·z")));
        }
        verified += 1;
    }
    Ok(Inspection { q: file.q, players: file.players, kind: file.kind.to_string(), count: file.triples.len(), verified })
}

pub fn cmd_triples_inspect(path: &Path) -> Result<Inspection> {
    inspect_bytes(&fs::read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::det_reference_polymat;
    use crate::algebra::polymatrix::tests::example_matrix;

    #[test]
    fn input_round_trip_and_validation() {
        let a = example_matrix(101);
        let file = MatrixInputFile::from_matrix(&a);
        assert_eq!(MatrixInputFile::parse(&file.to_json()).unwrap().validate().unwrap(), a);

        let mut bad = file.clone();
        bad.entries[1][0] = vec![3, 101];
        let msg = bad.validate().unwrap_err().to_string();
        assert!(msg.contains("entry (1,0) coefficient 1 is 101"), "{msg}");

        let mut deep = file.clone();
        deep.entries[0][1] = vec![0; 5].into_iter().chain([1]).collect();
        let msg = deep.validate().unwrap_err().to_string();
        assert!(msg.contains("entry (0,1) has degree 5 but d = 3"), "{msg}");

        let mut ragged = file;
        ragged.entries[1].pop();
        assert!(ragged.validate().unwrap_err().to_string().contains("row 1"));
        assert!(MatrixInputFile::parse("{\"q\": 7}").is_err());
    }

    #[test]
    fn trailing_zero_coefficients_are_allowed() {
        let json = r#"{"q": 7, "n": 1, "d": 0, "entries": [[[3, 0, 0]]]}"#;
        let a = MatrixInputFile::parse(json).unwrap().validate().unwrap();
        assert_eq!(a.entry(0, 0).coeff_values(), vec![3]);
    }

    #[test]
    fn grid_parsing() {
        let g = BenchGrid::parse("n=1..3 d=0,2 N=2,3,5").unwrap();
        assert_eq!(g.n, vec![1, 2, 3]);
        assert_eq!(g.d, vec![0, 2]);
        assert_eq!(g.players, vec![2, 3, 5]);
        assert_eq!(g.points().len(), 18);
        assert!(BenchGrid::parse("   ").unwrap().points().is_empty());
        assert!(BenchGrid::parse("n=3..2").unwrap().points().is_empty());
        assert_eq!(BenchGrid::parse("d=3").unwrap().points(), vec![(2, 3, 3)]);
        assert!(BenchGrid::parse("x=1").is_err());
        assert!(BenchGrid::parse("n=a").is_err());
    }

    #[test]
    fn det_matches_oracle_for_every_method() {
        let a = example_matrix(101);
        let expect = det_reference_polymat(&a);
        for m in Method::ALL {
            assert_eq!(run_det(m, &a, 3, 5, None).unwrap().output, expect, "{m}");
        }
    }

    #[test]
    fn exit_codes() {
        let f = PrimeField::new(101).unwrap();
        let singular = PolyMatrix::zero(f, 2, 1);
        let err = run_det(Method::ModX, &singular, 3, 1, None).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_LEAK);
        let json: serde_json::Value = serde_json::from_str(&error_json(&err)).unwrap();
        assert_eq!(json["error"], "leak");
        assert_eq!(json["signal"], "singular");
        assert_eq!(exit_code(&Error::Input("x".into())), EXIT_INPUT);
        assert_eq!(exit_code(&Error::Checksum("x".into())), EXIT_INPUT);
    }

    #[test]
    fn bench_rows_and_empty_grid() {
        assert_eq!(bench_csv(&[]), format!("{BENCH_HEADER}\n"));
        let grid = BenchGrid::parse("n=1..2 d=0..1 N=2,3").unwrap();
        let rows = cmd_bench(&grid, 101, 3, &Method::ALL).unwrap();
        assert_eq!(rows.len(), 4 * 8);
        assert!(rows.iter().all(|r| r.correct && r.rounds_constant));
        assert_eq!(BENCH_HEADER.split(',').count(), rows[0].csv_row().split(',').count());
    }

    #[test]
    fn triple_kinds_and_inspection() {
        let f = PrimeField::new(101).unwrap();
        for (kind, params) in [("field", ""), ("series", "m=3"), ("matrix", "n=2"), ("polymatrix", "n=2,d=1"), ("extfield", "k=3")] {
            let k = parse_kind(kind, params, f, 9).unwrap();
            let file = generate_triples(&k, f, 3, 4, 9).unwrap();
            let seen = inspect_bytes(&file.to_bytes()).unwrap();
            assert_eq!((seen.count, seen.verified, seen.kind.clone()), (4, 4, k.to_string()));
        }
        assert!(parse_kind("series", "", f, 0).is_err());
        assert!(parse_kind("cube", "", f, 0).is_err());
        let bytes = generate_triples(&TripleKind::Field, f, 2, 3, 1).unwrap().to_bytes();
        assert!(matches!(inspect_bytes(&bytes[..bytes.len() - 5]), Err(Error::Checksum(_))));
    }
}
