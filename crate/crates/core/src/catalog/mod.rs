//! The catalog of low-dimensional Lie superalgebras and super-bialgebras.
//!
//! The catalog is data: `catalog/algebras.alg` holds the algebras in the
//! definition language and `catalog/manifest.toml` holds automorphism
//! groups, the bialgebra entries and the isomorphism witnesses for solved
//! dual families.  Both files are embedded at build time; a directory with
//! replacements can be loaded at run time instead ([`Catalog::from_dir`]).
//!
//! [`verify`] certifies every entry exactly; [`example`] replays the
//! end-to-end classification of the duals of `C4`.

pub mod example;
pub mod verify;

use std::collections::BTreeMap;
use std::path::Path;

use num_rational::BigRational;
use serde::Deserialize;

use crate::bialgebra::DualStructure;
use crate::error::{Error, Result};
use crate::grading::GradedDims;
use crate::morphism::AutFamily;
use crate::params::{ParamDecl, ParamRange};
use crate::parser::{parse_algebras, parse_expr, parse_signed_rational, Expr};
use crate::poly::MultiPoly;
use crate::scalar::GScalar;
use crate::superalgebra::LieSuperAlgebra;

/// The shipped definition file.
pub const ALGEBRAS_SOURCE: &str = include_str!("../../catalog/algebras.alg");
/// The shipped manifest.
pub const MANIFEST_SOURCE: &str = include_str!("../../catalog/manifest.toml");

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    sampling: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    automorphisms: Vec<RawAut>,
    #[serde(default)]
    entry: Vec<RawEntry>,
    #[serde(default)]
    locus: Vec<RawLocus>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAut {
    algebra: String,
    matrix: String,
    #[serde(default)]
    nonzero: Vec<String>,
    #[serde(default)]
    primal_range: Option<String>,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParam {
    name: String,
    range: String,
    samples: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    group: u8,
    primal: String,
    dual: String,
    components: Vec<String>,
    #[serde(default)]
    primal_range: Option<String>,
    #[serde(default)]
    params: Vec<RawParam>,
    #[serde(default)]
    variant: Option<Vec<String>>,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLocus {
    id: String,
    primals: Vec<String>,
    solution: Vec<String>,
    status: String,
    #[serde(default)]
    primal_values: BTreeMap<String, String>,
    #[serde(default)]
    target: Option<String>,
    #[serde(default)]
    target_params: BTreeMap<String, String>,
    #[serde(default)]
    matrix: Option<String>,
    #[serde(default)]
    derived: Vec<String>,
    #[serde(default)]
    forced: Vec<String>,
    #[serde(default)]
    pinned: Vec<String>,
    #[serde(default)]
    samples: Vec<BTreeMap<String, String>>,
    #[serde(default)]
    note: Option<String>,
}

/// One dual component `f̃^{ij}_k = expr` (zero-based indices).
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    /// First upper index.
    pub i: usize,
    /// Second upper index.
    pub j: usize,
    /// Lower index.
    pub k: usize,
    /// Value.
    pub value: Expr,
    /// Source text.
    pub text: String,
}

impl Component {
    /// Parses `ftIJ_K = expr`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Catalog(format!("malformed component `{text}` (expected `ftIJ_K = expr`)"));
        let (lhs, rhs) = text.split_once('=').ok_or_else(bad)?;
        let idx = lhs.trim().strip_prefix("ft").ok_or_else(bad)?;
        let (up, low) = idx.split_once('_').ok_or_else(bad)?;
        let digits: Vec<usize> = up.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(bad)?;
        let [i, j] = digits.as_slice() else { return Err(bad()) };
        let k: usize = low.trim().parse().map_err(|_| bad())?;
        if *i == 0 || *j == 0 || k == 0 {
            return Err(bad());
        }
        Ok(Component { i: i - 1, j: j - 1, k: k - 1, value: parse_expr(rhs.trim())?, text: text.trim().to_string() })
    }
}

/// Builds a polynomial dual from components.
pub fn dual_from_components(name: &str, dims: GradedDims, comps: &[Component]) -> Result<DualStructure<MultiPoly>> {
    let vals = comps.iter().map(|c| Ok((c.i, c.j, c.k, c.value.to_poly()?))).collect::<Result<Vec<_>>>()?;
    DualStructure::from_components(name, dims, vals)
}

/// Evaluates components at a point.
pub fn dual_at(
    name: &str,
    dims: GradedDims,
    comps: &[Component],
    env: &BTreeMap<String, GScalar>,
) -> Result<DualStructure<GScalar>> {
    let vals = comps.iter().map(|c| Ok((c.i, c.j, c.k, c.value.eval(env)?))).collect::<Result<Vec<_>>>()?;
    DualStructure::from_components(name, dims, vals)
}

/// A bialgebra-side parameter with bounds and samples.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryParam {
    /// Declaration (name and bounds).
    pub decl: ParamDecl,
    /// Name of the sampling set.
    pub samples: String,
}

/// One catalog pair `(g, g̃)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    /// `"<primal>:<dual>"`.
    pub id: String,
    /// Group number: 4 for dimension (1|1), 5 for (2|1), 6 for (1|2).
    pub group: u8,
    /// Algebra id of `g`.
    pub primal: String,
    /// Label of the dual.
    pub dual_label: String,
    /// Dual constants.
    pub components: Vec<Component>,
    /// Narrower range for the primal parameter, if any.
    pub primal_range: Option<ParamRange>,
    /// Entry parameters.
    pub params: Vec<EntryParam>,
    /// Alternative transcription that is checked and reported separately.
    pub variant: Option<Vec<Component>>,
    /// Annotation.
    pub note: Option<String>,
}

/// Status of a solved dual family relative to the catalog.
#[derive(Clone, Debug, PartialEq)]
pub struct Locus {
    /// Identifier, e.g. `C1_p/i`.
    pub id: String,
    /// Primal algebras the solution applies to.
    pub primals: Vec<String>,
    /// Dual components in free symbols.
    pub solution: Vec<Component>,
    /// Fixed primal parameter values.
    pub primal_values: BTreeMap<String, BigRational>,
    /// Classification status.
    pub status: String,
    /// Witness data, when an isomorphism to a catalog algebra is claimed.
    pub witness: Option<Witness>,
    /// Free-symbol values to check at.
    pub samples: Vec<BTreeMap<String, BigRational>>,
    /// Annotation.
    pub note: Option<String>,
}

/// An isomorphism matrix from a solved dual to a catalog algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// Target algebra id.
    pub target: String,
    /// Target parameter values as expressions in the locus symbols.
    pub target_params: BTreeMap<String, Expr>,
    /// Matrix entries.
    pub matrix: Vec<Vec<Expr>>,
    /// Matrix source text.
    pub matrix_text: String,
    /// Ordered definitions evaluated before the matrix.
    pub derived: Vec<(String, Expr)>,
    /// Symbols that must vanish for admissibility.
    pub forced: Vec<String>,
    /// Derived symbols whose value is not free.
    pub pinned: Vec<String>,
}

/// The loaded catalog.
#[derive(Clone, Debug)]
pub struct Catalog {
    algebras: Vec<LieSuperAlgebra<MultiPoly>>,
    automorphisms: BTreeMap<String, AutFamily>,
    aut_ranges: BTreeMap<String, ParamRange>,
    entries: Vec<CatalogEntry>,
    loci: Vec<Locus>,
    sampling: BTreeMap<String, Vec<BigRational>>,
}

fn parse_rational_list(name: &str, vals: &[String]) -> Result<Vec<BigRational>> {
    vals.iter()
        .map(|v| parse_signed_rational(v).map_err(|e| Error::Catalog(format!("sampling set `{name}`: {e}"))))
        .collect()
}

/// Abelian algebras `I(m,n)` are generated rather than listed.
fn abelian_id(id: &str) -> Option<GradedDims> {
    let inner = id.strip_prefix("I(")?.strip_suffix(')')?;
    let (m, n) = inner.split_once(',')?;
    GradedDims::new(m.trim().parse().ok()?, n.trim().parse().ok()?).ok()
}

impl Catalog {
    /// The catalog embedded in the binary.
    pub fn builtin() -> Result<Self> {
        Self::from_sources(ALGEBRAS_SOURCE, MANIFEST_SOURCE)
    }

    /// Loads `algebras.alg` and `manifest.toml` from a directory.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let read = |f: &str| {
            std::fs::read_to_string(dir.join(f)).map_err(|e| Error::Catalog(format!("{}: {e}", dir.join(f).display())))
        };
        Self::from_sources(&read("algebras.alg")?, &read("manifest.toml")?)
    }

    /// Parses catalog sources.
    pub fn from_sources(algebras: &str, manifest: &str) -> Result<Self> {
        let algebras = parse_algebras(algebras)?;
        let raw: RawManifest = toml::from_str(manifest).map_err(|e| Error::Catalog(e.to_string()))?;
        let mut sampling = BTreeMap::new();
        for (name, vals) in &raw.sampling {
            sampling.insert(name.clone(), parse_rational_list(name, vals)?);
        }
        let mut cat = Catalog { algebras, automorphisms: BTreeMap::new(), aut_ranges: BTreeMap::new(), entries: Vec::new(), loci: Vec::new(), sampling };
        for a in raw.automorphisms {
            let dims = cat.algebra(&a.algebra)?.dims();
            let nz: Vec<&str> = a.nonzero.iter().map(String::as_str).collect();
            let fam = AutFamily::parse(dims, &a.matrix, &nz)?;
            let _ = a.note;
            if let Some(r) = &a.primal_range {
                cat.aut_ranges.insert(a.algebra.clone(), r.parse()?);
            }
            cat.automorphisms.insert(a.algebra, fam);
        }
        for e in raw.entry {
            let primal = cat.algebra(&e.primal)?;
            let parse_all = |v: &[String]| v.iter().map(|c| Component::parse(c)).collect::<Result<Vec<_>>>();
            let mut params = Vec::new();
            for p in &e.params {
                if !cat.sampling.contains_key(&p.samples) {
                    return Err(Error::Catalog(format!("entry {}: unknown sampling set `{}`", e.dual, p.samples)));
                }
                params.push(EntryParam { decl: ParamDecl::new(&p.name, p.range.parse()?), samples: p.samples.clone() });
            }
            let entry = CatalogEntry {
                id: format!("{}:{}", e.primal, e.dual),
                group: e.group,
                primal: e.primal,
                dual_label: e.dual,
                components: parse_all(&e.components)?,
                primal_range: e.primal_range.as_deref().map(str::parse).transpose()?,
                params,
                variant: e.variant.as_deref().map(parse_all).transpose()?,
                note: e.note,
            };
            for c in entry.components.iter().chain(entry.variant.iter().flatten()) {
                for idx in [c.i, c.j, c.k] {
                    primal.dims().check(idx).map_err(|err| Error::Catalog(format!("entry {}: {err}", entry.id)))?;
                }
            }
            if cat.entries.iter().any(|o| o.id == entry.id) {
                return Err(Error::Catalog(format!("duplicate entry {}", entry.id)));
            }
            cat.entries.push(entry);
        }
        for l in raw.locus {
            for p in &l.primals {
                cat.algebra(p)?;
            }
            let rat_map = |m: &BTreeMap<String, String>| -> Result<BTreeMap<String, BigRational>> {
                m.iter().map(|(k, v)| Ok((k.clone(), parse_signed_rational(v)?))).collect()
            };
            let witness = match (&l.target, &l.matrix) {
                (Some(t), Some(m)) => {
                    cat.algebra(t)?;
                    let derived = l
                        .derived
                        .iter()
                        .map(|d| {
                            let (n, e) = d.split_once('=').ok_or_else(|| Error::Catalog(format!("malformed definition `{d}`")))?;
                            Ok((n.trim().to_string(), parse_expr(e.trim())?))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Some(Witness {
                        target: t.clone(),
                        target_params: l.target_params.iter().map(|(k, v)| Ok((k.clone(), parse_expr(v)?))).collect::<Result<_>>()?,
                        matrix: crate::parser::parse_expr_matrix(m)?,
                        matrix_text: m.clone(),
                        derived,
                        forced: l.forced.clone(),
                        pinned: l.pinned.clone(),
                    })
                }
                (None, None) => None,
                _ => return Err(Error::Catalog(format!("locus {}: target and matrix go together", l.id))),
            };
            cat.loci.push(Locus {
                id: l.id.clone(),
                primals: l.primals.clone(),
                solution: l.solution.iter().map(|c| Component::parse(c)).collect::<Result<_>>()?,
                primal_values: rat_map(&l.primal_values)?,
                status: l.status.clone(),
                witness,
                samples: l.samples.iter().map(rat_map).collect::<Result<_>>()?,
                note: l.note.clone(),
            });
        }
        Ok(cat)
    }

    /// Replaces (or adds) sampling sets, e.g. from a `--samples` file.
    pub fn with_sampling_overrides(mut self, text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Overrides {
            sampling: BTreeMap<String, Vec<String>>,
        }
        let o: Overrides = toml::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        for (name, vals) in &o.sampling {
            self.sampling.insert(name.clone(), parse_rational_list(name, vals)?);
        }
        Ok(self)
    }

    /// All listed algebras, in file order.
    pub fn algebras(&self) -> &[LieSuperAlgebra<MultiPoly>] {
        &self.algebras
    }

    /// An algebra by id (including the generated abelian `I(m,n)`).
    pub fn algebra(&self, id: &str) -> Result<LieSuperAlgebra<MultiPoly>> {
        if let Some(g) = self.algebras.iter().find(|g| g.name() == id) {
            return Ok(g.clone());
        }
        abelian_id(id).map(|d| LieSuperAlgebra::abelian(id, d)).ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// Automorphism family of an algebra.
    pub fn automorphisms(&self, id: &str) -> Option<&AutFamily> {
        self.automorphisms.get(id)
    }

    /// Every automorphism family, by algebra id.
    pub fn automorphism_families(&self) -> &BTreeMap<String, AutFamily> {
        &self.automorphisms
    }

    /// Sampled parameter values of an algebra at which its automorphism
    /// family is the whole group: the sampling set of each parameter,
    /// intersected with the algebra's range and the family's own range
    /// (e.g. a family valid only away from a special parameter value).
    pub fn automorphism_points(&self, id: &str) -> Result<Vec<crate::params::Assignment>> {
        let g = self.algebra(id)?;
        let narrowed = self.aut_ranges.get(id);
        let axes: Vec<(String, Vec<BigRational>)> = g
            .params()
            .iter()
            .map(|p| {
                let vals = self
                    .sampling(&p.name)
                    .unwrap_or(&[])
                    .iter()
                    .filter(|v| p.range.contains(v) && narrowed.is_none_or(|r| r.contains(v)))
                    .cloned()
                    .collect();
                (p.name.clone(), vals)
            })
            .collect();
        Ok(cartesian(&axes))
    }

    /// Every bialgebra entry, in manifest order.
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Every solution locus.
    pub fn loci(&self) -> &[Locus] {
        &self.loci
    }

    /// A sampling set.
    pub fn sampling(&self, name: &str) -> Option<&[BigRational]> {
        self.sampling.get(name).map(Vec::as_slice)
    }

    /// Looks up an entry by full id `primal:dual`, falling back to the first
    /// entry (in manifest order) whose dual label matches.
    pub fn load_entry(&self, id: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .or_else(|| self.entries.iter().find(|e| e.dual_label == id))
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// The primal algebra of an entry, with its parameter range narrowed as
    /// the entry requires.
    pub fn primal_of(&self, e: &CatalogEntry) -> Result<LieSuperAlgebra<MultiPoly>> {
        let g = self.algebra(&e.primal)?;
        let params: Vec<ParamDecl> = g
            .params()
            .iter()
            .map(|p| match &e.primal_range {
                Some(r) => ParamDecl::new(&p.name, r.clone()),
                None => p.clone(),
            })
            .collect();
        Ok(g.with_params(params))
    }

    /// The entry's dual as a polynomial structure (with its parameters).
    pub fn dual_of(&self, e: &CatalogEntry) -> Result<DualStructure<MultiPoly>> {
        let g = self.primal_of(e)?;
        let d = dual_from_components(&e.dual_label, g.dims(), &e.components)?;
        let mut params = g.params().to_vec();
        params.extend(e.params.iter().map(|p| p.decl.clone()));
        Ok(DualStructure::from_algebra(d.into_algebra().with_params(params)))
    }

    /// Every sample point of an entry: the cartesian product of the primal
    /// parameter samples (within range) and the entry parameter samples.
    /// Empty when some parameter has no admissible sample.
    pub fn sample_points(&self, e: &CatalogEntry) -> Result<Vec<crate::params::Assignment>> {
        let g = self.primal_of(e)?;
        let mut axes: Vec<(String, Vec<BigRational>)> = Vec::new();
        for p in g.params() {
            let set = self.sampling(&p.name).ok_or_else(|| Error::Catalog(format!("no sampling set for `{}`", p.name)))?;
            axes.push((p.name.clone(), set.iter().filter(|v| p.range.contains(v)).cloned().collect()));
        }
        for p in &e.params {
            let set = self.sampling(&p.samples).ok_or_else(|| Error::Catalog(format!("unknown sampling set `{}`", p.samples)))?;
            let vals: Vec<BigRational> = set.iter().filter(|v| p.decl.range.contains(v)).cloned().collect();
            axes.push((p.decl.name.clone(), vals));
        }
        // An empty axis leaves the entry unsampled; it is still certified
        // symbolically.
        let points = cartesian(&axes);
        Ok(points)
    }
}

/// Every combination of the given axis values.
pub fn cartesian(axes: &[(String, Vec<BigRational>)]) -> Vec<crate::params::Assignment> {
    let mut points = vec![crate::params::Assignment::new()];
    for (name, vals) in axes {
        points = points
            .into_iter()
            .flat_map(|pt| {
                vals.iter().map(move |v| {
                    let mut q = pt.clone();
                    q.insert(name.clone(), v.clone());
                    q
                })
            })
            .collect();
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_loads() {
        let cat = Catalog::builtin().unwrap();
        assert_eq!(cat.algebras().len(), 11);
        assert_eq!(cat.entries().len(), 48);
        let by_group = |g| cat.entries().iter().filter(|e| e.group == g).count();
        assert_eq!((by_group(4), by_group(5), by_group(6)), (4, 8, 36));
        assert_eq!(cat.automorphism_families().len(), 11);
        assert_eq!(cat.load_entry("B:(A11+A)").unwrap().components[0].text, "ft22_1 = i");
        assert_eq!(cat.load_entry("C1_-p.i").unwrap().primal, "C1_p");
        assert!(matches!(cat.load_entry("nope"), Err(Error::UnknownId(_))));
        assert_eq!(cat.algebra("I(1,2)").unwrap().dims(), GradedDims::new(1, 2).unwrap());
    }

    #[test]
    fn component_syntax() {
        let c = Component::parse("ft23_1 = i*k").unwrap();
        assert_eq!((c.i, c.j, c.k), (1, 2, 0));
        assert!(Component::parse("f23_1 = 1").is_err());
        assert!(Component::parse("ft2_1 = 1").is_err());
    }

    #[test]
    fn sample_points_respect_bounds() {
        let cat = Catalog::builtin().unwrap();
        let e = cat.load_entry("C2_p:(A11+2A)^1_{1,k,1}").unwrap();
        let pts = cat.sample_points(e).unwrap();
        // p ∈ {-1, -1/2, 1/2} (1 excluded by the entry), k ∈ {-1/2, 0, 1/2}
        assert_eq!(pts.len(), 9);
        let e = cat.load_entry("C5_p:I(1,2)").unwrap();
        assert_eq!(cat.sample_points(e).unwrap().len(), 2);
    }
}
