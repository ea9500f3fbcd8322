use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::matroid::{GraphEdge, Matroid};
use crate::set::{canonical_masks, GroundSet, SetFamily, ENUMERATION_BOUND};

use super::satisfies_independence_axioms;

/// Largest ground set for which every matroid is enumerated.
pub const EXHAUSTIVE_MAX: usize = 5;

const ENTRY_BOUND: i64 = 3;
const CORPUS_MAX_SIZE: usize = 8;

/// What to generate.
///
/// Text syntax: `uniform:K,N`, `graphic:V,E`, `vector:R,C`,
/// `sum(SPEC;SPEC;...)`, `exhaustive:N`, `mixed:COUNT`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Every set of at most `rank` of `size` elements is independent.
    Uniform { rank: usize, size: usize },
    /// Cycle matroid of a random multigraph; loops and parallel edges occur.
    Graphic { vertices: usize, edges: usize },
    /// Columns of a random integer matrix with entries in `-3..=3`.
    Vector { rows: usize, cols: usize },
    /// Direct sum of one matroid drawn from each part.
    Sum(Vec<GeneratorKind>),
    /// Every matroid on `n` labelled elements.
    Exhaustive(usize),
    /// `count` small matroids from randomly chosen generators.
    Mixed { count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, seed: u64) -> Self {
        Self { kind, seed }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::Uniform { rank, size } => write!(f, "uniform:{rank},{size}"),
            GeneratorKind::Graphic { vertices, edges } => write!(f, "graphic:{vertices},{edges}"),
            GeneratorKind::Vector { rows, cols } => write!(f, "vector:{rows},{cols}"),
            GeneratorKind::Sum(parts) => {
                f.write_str("sum(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            GeneratorKind::Exhaustive(n) => write!(f, "exhaustive:{n}"),
            GeneratorKind::Mixed { count } => write!(f, "mixed:{count}"),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

fn numbers<const K: usize>(args: &str, name: &str) -> Result<[usize; K]> {
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    if parts.len() != K {
        return Err(invalid(format!("{name} takes {K} numbers, got `{args}`")));
    }
    let mut out = [0; K];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|_| invalid(format!("`{p}` is not a number in {name}")))?;
    }
    Ok(out)
}

/// Splits on `;` outside parentheses.
fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(invalid("unbalanced parentheses"));
                }
            }
            ';' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(invalid("unbalanced parentheses"));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("sum(").and_then(|r| r.strip_suffix(')')) {
            let parts = split_top_level(inner)?
                .into_iter()
                .map(str::parse)
                .collect::<Result<Vec<GeneratorKind>>>()?;
            let kind = GeneratorKind::Sum(parts);
            kind.validate()?;
            return Ok(kind);
        }
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("expected NAME:ARGS, got `{s}`")))?;
        let kind = match name.trim() {
            "uniform" => {
                let [rank, size] = numbers(args, "uniform")?;
                GeneratorKind::Uniform { rank, size }
            }
            "graphic" => {
                let [vertices, edges] = numbers(args, "graphic")?;
                GeneratorKind::Graphic { vertices, edges }
            }
            "vector" => {
                let [rows, cols] = numbers(args, "vector")?;
                GeneratorKind::Vector { rows, cols }
            }
            "exhaustive" => GeneratorKind::Exhaustive(numbers::<1>(args, "exhaustive")?[0]),
            "mixed" => GeneratorKind::Mixed {
                count: numbers::<1>(args, "mixed")?[0],
            },
            other => return Err(invalid(format!("unknown generator `{other}`"))),
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl GeneratorKind {
    /// Ground-set size of each generated matroid, when fixed.
    pub fn size(&self) -> Option<usize> {
        match self {
            GeneratorKind::Uniform { size, .. } => Some(*size),
            GeneratorKind::Graphic { edges, .. } => Some(*edges),
            GeneratorKind::Vector { cols, .. } => Some(*cols),
            GeneratorKind::Exhaustive(n) => Some(*n),
            GeneratorKind::Sum(parts) => parts.iter().map(|p| p.size()).sum(),
            GeneratorKind::Mixed { .. } => None,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            GeneratorKind::Uniform { rank, size } if rank > size => {
                return Err(invalid(format!("uniform rank {rank} exceeds size {size}")))
            }
            GeneratorKind::Graphic { vertices: 0, .. } => {
                return Err(invalid("graphic needs at least one vertex"))
            }
            GeneratorKind::Vector { rows: 0, .. } => {
                return Err(invalid("vector needs at least one row"))
            }
            GeneratorKind::Exhaustive(n) if *n > EXHAUSTIVE_MAX => {
                return Err(invalid(format!(
                    "exhaustive generation is limited to {EXHAUSTIVE_MAX} elements"
                )))
            }
            GeneratorKind::Sum(parts) => {
                if parts.is_empty() {
                    return Err(invalid("sum needs at least one part"));
                }
                if parts.iter().any(|p| {
                    matches!(
                        p,
                        GeneratorKind::Exhaustive(_) | GeneratorKind::Mixed { .. }
                    )
                }) {
                    return Err(invalid("sum parts must each produce one matroid"));
                }
            }
            _ => {}
        }
        match self.size() {
            Some(0) => Err(invalid("generated ground sets must be non-empty")),
            Some(n) if n > ENUMERATION_BOUND => Err(invalid(format!(
                "ground set of {n} elements exceeds {ENUMERATION_BOUND}"
            ))),
            _ => Ok(()),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    /// `KIND` or `KIND@SEED`; the seed defaults to 0.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, seed) = match s.rsplit_once('@') {
            Some((k, seed)) => (
                k,
                seed.trim()
                    .parse()
                    .map_err(|_| invalid(format!("bad seed `{seed}`")))?,
            ),
            None => (s, 0),
        };
        Ok(Self::new(kind.parse()?, seed))
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind, self.seed)
    }
}

fn labels(n: usize) -> GroundSet {
    GroundSet::indexed("e", n).expect("validated size")
}

fn uniform(rank: usize, size: usize) -> Result<Matroid> {
    let g = labels(size);
    let fam = SetFamily::from_masks(
        &g,
        canonical_masks(size).filter(|m| m.count_ones() as usize <= rank),
    )?;
    Matroid::from_independents(&g, &fam)
}

fn graphic(vertices: usize, edges: usize, rng: &mut ChaCha8Rng) -> Result<Matroid> {
    let names: Vec<String> = (1..=vertices).map(|i| format!("v{i}")).collect();
    let es: Vec<GraphEdge> = (1..=edges)
        .map(|i| {
            let u = rng.gen_range(0..vertices);
            let v = rng.gen_range(0..vertices);
            GraphEdge::new(format!("e{i}"), names[u].clone(), names[v].clone())
        })
        .collect();
    Matroid::from_graph(&names, &es)
}

fn vector(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Result<Matroid> {
    let columns: Vec<Vec<i64>> = (0..cols)
        .map(|_| {
            (0..rows)
                .map(|_| rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND))
                .collect()
        })
        .collect();
    Matroid::from_matrix(
        &labels(cols),
        &RationalMatrix::from_integer_columns(&columns)?,
    )
}

/// Direct sum with elements relabelled `e1..en` in order of the parts.
pub fn direct_sum(parts: &[Matroid]) -> Result<Matroid> {
    let n: usize = parts.iter().map(|m| m.ground().len()).sum();
    if n == 0 {
        return Err(Error::EmptyGround);
    }
    if n > ENUMERATION_BOUND {
        return Err(Error::GroundTooLarge {
            size: n,
            max: ENUMERATION_BOUND,
        });
    }
    let g = labels(n);
    let mut circuits = Vec::new();
    let mut shift = 0;
    for m in parts {
        circuits.extend(m.circuits().masks().iter().map(|c| c << shift));
        shift += m.ground().len();
    }
    // A union of circuit families on disjoint supports satisfies C1-C3.
    Ok(Matroid::from_circuits_unchecked(&g, &circuits))
}

/// Every matroid on `n` labelled elements, as downward-closed families that
/// pass the literal exchange check, in a fixed order.
fn exhaustive(n: usize) -> Result<Vec<Matroid>> {
    let g = labels(n);
    let order: Vec<u32> = canonical_masks(n).collect();
    let mut member = vec![false; 1 << n];
    member[0] = true;
    let mut out = Vec::new();
    downsets(n, &order, 1, &mut member, &mut |member| {
        if satisfies_independence_axioms(n, member) {
            let fam = SetFamily::from_masks(
                &g,
                (0..member.len() as u32).filter(|&x| member[x as usize]),
            )?;
            out.push(Matroid::from_independents(&g, &fam)?);
        }
        Ok(())
    })?;
    Ok(out)
}

fn downsets(
    n: usize,
    order: &[u32],
    pos: usize,
    member: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[bool]) -> Result<()>,
) -> Result<()> {
    if pos == order.len() {
        return emit(member);
    }
    let x = order[pos];
    downsets(n, order, pos + 1, member, emit)?;
    let subsets_in = (0..n).all(|e| x & (1 << e) == 0 || member[(x & !(1 << e)) as usize]);
    if subsets_in {
        member[x as usize] = true;
        downsets(n, order, pos + 1, member, emit)?;
        member[x as usize] = false;
    }
    Ok(())
}

fn single(kind: &GeneratorKind, rng: &mut ChaCha8Rng) -> Result<Matroid> {
    match kind {
        GeneratorKind::Uniform { rank, size } => uniform(*rank, *size),
        GeneratorKind::Graphic { vertices, edges } => graphic(*vertices, *edges, rng),
        GeneratorKind::Vector { rows, cols } => vector(*rows, *cols, rng),
        GeneratorKind::Sum(parts) => {
            let ms = parts
                .iter()
                .map(|p| {
                    let mut child = ChaCha8Rng::seed_from_u64(rng.gen());
                    single(p, &mut child)
                })
                .collect::<Result<Vec<_>>>()?;
            direct_sum(&ms)
        }
        GeneratorKind::Exhaustive(_) | GeneratorKind::Mixed { .. } => {
            Err(invalid("expected a single-matroid generator"))
        }
    }
}

fn small_kind(rng: &mut ChaCha8Rng, max: usize) -> GeneratorKind {
    match rng.gen_range(0..3) {
        0 => {
            let size = rng.gen_range(1..=max);
            GeneratorKind::Uniform {
                rank: rng.gen_range(0..=size),
                size,
            }
        }
        1 => GeneratorKind::Graphic {
            vertices: rng.gen_range(1..=5),
            edges: rng.gen_range(1..=max),
        },
        _ => GeneratorKind::Vector {
            rows: rng.gen_range(1..=3),
            cols: rng.gen_range(1..=max),
        },
    }
}

fn random_kind(rng: &mut ChaCha8Rng) -> GeneratorKind {
    if rng.gen_range(0..4) == 0 {
        let first = small_kind(rng, CORPUS_MAX_SIZE - 1);
        let rest = CORPUS_MAX_SIZE - first.size().expect("fixed size");
        GeneratorKind::Sum(vec![first, small_kind(rng, rest)])
    } else {
        small_kind(rng, CORPUS_MAX_SIZE)
    }
}

/// `count` seeded matroids on at most eight elements from mixed generators,
/// each with a spec string that regenerates it.
pub fn corpus(seed: u64, count: usize) -> Vec<(String, Matroid)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let spec = GeneratorSpec::new(random_kind(&mut rng), rng.gen());
            let m = generate(&spec)
                .expect("corpus specs are valid")
                .pop()
                .expect("one matroid");
            (spec.to_string(), m)
        })
        .collect()
}

/// Deterministic in `spec`: the same kind and seed give the same matroids.
pub fn generate(spec: &GeneratorSpec) -> Result<Vec<Matroid>> {
    spec.kind.validate()?;
    match &spec.kind {
        GeneratorKind::Exhaustive(n) => exhaustive(*n),
        GeneratorKind::Mixed { count } => Ok(corpus(spec.seed, *count)
            .into_iter()
            .map(|(_, m)| m)
            .collect()),
        kind => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            Ok(vec![single(kind, &mut rng)?])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::matroid_components;
    use crate::fixtures;

    fn spec(s: &str) -> GeneratorSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "uniform:2,4@0",
            "graphic:4,6@17",
            "vector:3,7@5",
            "sum(uniform:1,2;sum(graphic:2,2;vector:1,3))@9",
            "exhaustive:3@0",
            "mixed:10@1",
        ] {
            assert_eq!(spec(s).to_string(), s);
        }
        assert_eq!(spec("uniform:2,4").seed, 0);
        for bad in [
            "uniform:5,4",
            "exhaustive:6",
            "uniform:2",
            "cubic:1,2",
            "sum(uniform:1,2",
            "sum(exhaustive:2)",
            "vector:0,3",
            "uniform:0,0",
            "graphic:3,25",
            "uniform:1,2@x",
        ] {
            assert!(bad.parse::<GeneratorSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn uniform_matches_fixture() {
        let m = generate(&spec("uniform:2,4")).unwrap().pop().unwrap();
        let f = fixtures::uniform_2_4();
        assert_eq!(m.independents().masks(), f.independents().masks());
    }

    #[test]
    fn sum_of_two_lines_is_disconnected() {
        let m = generate(&spec("sum(uniform:1,2;uniform:1,2)"))
            .unwrap()
            .pop()
            .unwrap();
        let c = matroid_components(&m);
        assert_eq!(c.to_string(), "{e1,e2} | {e3,e4}");
    }

    #[test]
    fn exhaustive_counts() {
        // Labelled matroids on 1..5 elements.
        let counts: Vec<usize> = (1..=5)
            .map(|n| {
                generate(&GeneratorSpec::new(GeneratorKind::Exhaustive(n), 0))
                    .unwrap()
                    .len()
            })
            .collect();
        assert_eq!(counts, vec![2, 5, 16, 68, 406]);
        let two = generate(&spec("exhaustive:2")).unwrap();
        let fams: Vec<String> = two.iter().map(|m| m.independents().to_string()).collect();
        assert_eq!(
            fams,
            vec![
                "{{}}",
                "{{}, {e2}}",
                "{{}, {e1}}",
                "{{}, {e1}, {e2}}",
                "{{}, {e1}, {e2}, {e1,e2}}",
            ]
        );
    }

    #[test]
    fn deterministic() {
        for s in [
            "graphic:5,8@3",
            "vector:2,6@3",
            "mixed:30@11",
            "sum(graphic:3,3;vector:2,3)@4",
        ] {
            assert_eq!(generate(&spec(s)).unwrap(), generate(&spec(s)).unwrap());
        }
        assert_ne!(
            generate(&spec("mixed:30@11")).unwrap(),
            generate(&spec("mixed:30@12")).unwrap()
        );
    }

    #[test]
    fn corpus_is_small_and_regenerable() {
        for (name, m) in corpus(7, 60) {
            assert!(m.ground().len() <= CORPUS_MAX_SIZE, "{name}");
            assert_eq!(generate(&spec(&name)).unwrap(), vec![m]);
        }
    }
}
