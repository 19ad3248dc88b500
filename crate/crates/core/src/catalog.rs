//! Symbolic descriptors of the knot constructions and the theorem checks built on them.
//!
//! Projection complexity `mu` and the singular-set kind cannot be computed
//! here; they are declared per construction and carried through spinning.
//! The algebra attached to each descriptor (a Seifert matrix or a declared
//! module presentation) is what the checks actually evaluate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lambda_module::ModulePresentation;
use crate::laurent::{AlexanderClass, LaurentPoly};
use crate::matrix::{IntMatrix, LaurentMatrix};
use crate::seifert::{KnottednessCertificate, SeifertMatrix, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

/// Lowest dimension the high-dimensional constructions exist in.
pub const MIN_HIGH_DIMENSION: u32 = 5;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Underlying {
    Sphere,
    #[serde(rename = "product_s3xs2")]
    ProductS3xS2,
    Other(String),
}

impl fmt::Display for Underlying {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Underlying::Sphere => f.write_str("sphere"),
            Underlying::ProductS3xS2 => f.write_str("S^3 x S^2 or its spin"),
            Underlying::Other(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularKind {
    None,
    DoublePointsOnly,
    Other,
}

impl fmt::Display for SingularKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingularKind::None => "none",
            SingularKind::DoublePointsOnly => "double points only",
            SingularKind::Other => "other",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Base { label: String, n: u32 },
    Spin(Box<Construction>),
}

impl Construction {
    /// Dimension produced by this recipe.
    pub fn dimension(&self) -> u32 {
        match self {
            Construction::Base { n, .. } => *n,
            Construction::Spin(child) => child.dimension() + 1,
        }
    }

    pub fn spin_count(&self) -> u32 {
        match self {
            Construction::Base { .. } => 0,
            Construction::Spin(child) => child.spin_count() + 1,
        }
    }

    pub fn base_label(&self) -> &str {
        match self {
            Construction::Base { label, .. } => label,
            Construction::Spin(child) => child.base_label(),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Base { label, n } => write!(f, "{label} (n = {n})"),
            Construction::Spin(child) => write!(f, "spin({child})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnotDescriptor {
    pub name: String,
    pub n: u32,
    pub underlying: Underlying,
    pub seifert: Option<SeifertMatrix>,
    pub module_h3: Option<ModulePresentation>,
    pub mu: u32,
    pub singular_kind: SingularKind,
    pub construction: Construction,
    pub provenance: Vec<String>,
}

impl KnotDescriptor {
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::InvalidDescriptor {
                name: self.name.clone(),
                reason,
            })
        };
        if self.n == 0 {
            return fail("dimension must be positive".into());
        }
        if (self.mu == 0) != (self.singular_kind == SingularKind::None) {
            return fail(format!(
                "mu = {} is inconsistent with singular kind {:?}",
                self.mu, self.singular_kind
            ));
        }
        if self.construction.dimension() != self.n {
            return fail(format!(
                "construction produces dimension {}, descriptor says {}",
                self.construction.dimension(),
                self.n
            ));
        }
        if self.seifert.is_some() && self.underlying != Underlying::Sphere {
            return fail("Seifert matrices are only attached to spheres".into());
        }
        if self.seifert.is_none() && self.module_h3.is_none() {
            return fail("no Seifert matrix and no module presentation".into());
        }
        Ok(())
    }

    /// Rotates the construction about an axis: one dimension up, projection data
    /// and Alexander data unchanged.
    pub fn spin(&self) -> KnotDescriptor {
        KnotDescriptor {
            n: self.n + 1,
            construction: Construction::Spin(Box::new(self.construction.clone())),
            ..self.clone()
        }
    }

    pub fn spin_to(&self, n: u32) -> KnotDescriptor {
        let mut k = self.clone();
        while k.n < n {
            k = k.spin();
        }
        k
    }

    /// The order-ideal class of the middle homology, from whichever datum is present.
    pub fn alexander_class(&self) -> Option<AlexanderClass> {
        match (&self.seifert, &self.module_h3) {
            (Some(s), _) => Some(s.alexander_class()),
            (None, Some(m)) => Some(m.cyclic_class()),
            (None, None) => None,
        }
    }

    /// `[K, -K, K*, -K*]`. Module-only descriptors are conjugated (`t -> t^-1`)
    /// by reversal and by mirroring, so the composite acts trivially.
    pub fn orientation_variants(&self) -> [KnotDescriptor; 4] {
        let labels = ["", "-", "", "-"];
        let stars = ["", "", "*", "*"];
        let mut out: [KnotDescriptor; 4] = std::array::from_fn(|_| self.clone());
        for (i, k) in out.iter_mut().enumerate() {
            k.name = format!("{}{}{}", labels[i], self.name, stars[i]);
        }
        if let Some(s) = &self.seifert {
            for (k, v) in out.iter_mut().zip(s.orientation_variants()) {
                k.seifert = Some(v);
            }
        }
        if let Some(m) = &self.module_h3 {
            out[1].module_h3 = Some(m.conjugate());
            out[2].module_h3 = Some(m.conjugate());
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&DescriptorDoc::from(self))?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: DescriptorDoc = serde_json::from_str(s)?;
        doc.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct SeifertDoc {
    matrix: String,
    q: u32,
}

#[derive(Serialize, Deserialize)]
struct ModuleDoc {
    presentation: String,
}

/// Versioned on-disk form of a [`KnotDescriptor`]. Matrices use the `a,b;c,d` grammar.
#[derive(Serialize, Deserialize)]
pub(crate) struct DescriptorDoc {
    version: u32,
    name: String,
    n: u32,
    underlying: Underlying,
    mu: u32,
    singular_kind: SingularKind,
    seifert: Option<SeifertDoc>,
    module: Option<ModuleDoc>,
    construction: Construction,
    provenance: Vec<String>,
}

impl From<&KnotDescriptor> for DescriptorDoc {
    fn from(k: &KnotDescriptor) -> Self {
        DescriptorDoc {
            version: SCHEMA_VERSION,
            name: k.name.clone(),
            n: k.n,
            underlying: k.underlying.clone(),
            mu: k.mu,
            singular_kind: k.singular_kind,
            seifert: k.seifert.as_ref().map(|s| SeifertDoc {
                matrix: s.matrix().to_string(),
                q: s.q(),
            }),
            module: k.module_h3.as_ref().map(|m| ModuleDoc {
                presentation: m.relations().to_string(),
            }),
            construction: k.construction.clone(),
            provenance: k.provenance.clone(),
        }
    }
}

impl TryFrom<DescriptorDoc> for KnotDescriptor {
    type Error = Error;

    fn try_from(doc: DescriptorDoc) -> Result<Self> {
        if doc.version != SCHEMA_VERSION {
            return Err(Error::Json(format!(
                "unsupported descriptor version {}",
                doc.version
            )));
        }
        let seifert = doc
            .seifert
            .map(|s| SeifertMatrix::new(s.matrix.parse::<IntMatrix>()?, s.q))
            .transpose()?;
        let module_h3 = doc
            .module
            .map(|m| {
                m.presentation
                    .parse::<LaurentMatrix>()
                    .map(ModulePresentation::new)
            })
            .transpose()?;
        let k = KnotDescriptor {
            name: doc.name,
            n: doc.n,
            underlying: doc.underlying,
            seifert,
            module_h3,
            mu: doc.mu,
            singular_kind: doc.singular_kind,
            construction: doc.construction,
            provenance: doc.provenance,
        };
        k.validate()?;
        Ok(k)
    }
}

/// JSON array of descriptor documents.
pub fn catalog_to_json(entries: &[KnotDescriptor]) -> Result<String> {
    let docs: Vec<DescriptorDoc> = entries.iter().map(DescriptorDoc::from).collect();
    Ok(serde_json::to_string_pretty(&docs)?)
}

pub fn catalog_from_json(s: &str) -> Result<Vec<KnotDescriptor>> {
    let docs: Vec<DescriptorDoc> = serde_json::from_str(s)?;
    docs.into_iter().map(KnotDescriptor::try_from).collect()
}

fn seifert_2x2(a: i64, b: i64, c: i64, d: i64, q: u32) -> SeifertMatrix {
    let m = IntMatrix::from_i64_rows(&[&[a, b], &[c, d]]).expect("2x2 literal");
    SeifertMatrix::new(m, q).expect("catalog Seifert matrices are valid")
}

fn require_dimension(n: u32, min: u32) -> Result<()> {
    if n < min {
        Err(Error::DimensionTooSmall { n, min })
    } else {
        Ok(())
    }
}

/// The standard sphere, spun up from the trivial 1-knot.
pub fn unknot(n: u32) -> Result<KnotDescriptor> {
    require_dimension(n, 1)?;
    let base = KnotDescriptor {
        name: "unknot".into(),
        n: 1,
        underlying: Underlying::Sphere,
        seifert: Some(SeifertMatrix::trivial(1)),
        module_h3: None,
        mu: 0,
        singular_kind: SingularKind::None,
        construction: Construction::Base {
            label: "round circle".into(),
            n: 1,
        },
        provenance: vec!["round sphere in a hyperplane; its projection is an embedding".into()],
    };
    Ok(base.spin_to(n))
}

/// The trefoil and its 0-twist spins: mu = 3 in every dimension.
pub fn trefoil_tower(n: u32) -> Result<KnotDescriptor> {
    require_dimension(n, 1)?;
    let base = KnotDescriptor {
        name: "trefoil-tower".into(),
        n: 1,
        underlying: Underlying::Sphere,
        seifert: Some(seifert_2x2(-1, 1, 0, -1, 1)),
        module_h3: None,
        mu: 3,
        singular_kind: SingularKind::DoublePointsOnly,
        construction: Construction::Base {
            label: "trefoil".into(),
            n: 1,
        },
        provenance: vec![
            "mu = 3: the three crossings of the standard trefoil diagram, each rotated into one \
             double-point component by 0-twist spinning (declared)"
                .into(),
            "Seifert matrix (-1,1;0,-1), q = 1: standard genus-one surface of the trefoil".into(),
        ],
    };
    Ok(base.spin_to(n))
}

/// The knot with a two-component double-point set and Alexander class t^2 - 3t + 1.
pub fn theorem1_knot(n: u32) -> Result<KnotDescriptor> {
    require_dimension(n, MIN_HIGH_DIMENSION)?;
    let base = KnotDescriptor {
        name: "two-component-knot".into(),
        n: 5,
        underlying: Underlying::Sphere,
        seifert: Some(seifert_2x2(1, 1, 0, -1, 3)),
        module_h3: None,
        mu: 2,
        singular_kind: SingularKind::DoublePointsOnly,
        construction: Construction::Base {
            label: "two displaced S^3 x D^3 bundles joined across a 6-ball".into(),
            n: 5,
        },
        provenance: vec![
            "mu = 2 and double points only: one S^2 x S^2 double-point component from each \
             displaced bundle (declared from the construction)"
                .into(),
            "Seifert matrix (1,1;0,-1), q = 3: the two 3-spheres, self-linking +1 and -1, \
             linking one (declared from the construction)"
                .into(),
        ],
    };
    Ok(base.spin_to(n))
}

/// `(K0, K1)`: two embeddings of the same manifold, mu = 0 versus mu = 1.
pub fn theorem3_pair(n: u32) -> Result<(KnotDescriptor, KnotDescriptor)> {
    require_dimension(n, MIN_HIGH_DIMENSION)?;
    let k0 = KnotDescriptor {
        name: "K0".into(),
        n: 5,
        underlying: Underlying::ProductS3xS2,
        seifert: None,
        module_h3: Some(ModulePresentation::zero_module()),
        mu: 0,
        singular_kind: SingularKind::None,
        construction: Construction::Base {
            label: "boundary of a tubular neighbourhood of a trivial 3-sphere".into(),
            n: 5,
        },
        provenance: vec![
            "mu = 0: the submanifold lies in the projection hyperplane".into(),
            "H_3 of the infinite cyclic cover declared zero".into(),
        ],
    };
    let k1 = KnotDescriptor {
        name: "K1".into(),
        n: 5,
        underlying: Underlying::ProductS3xS2,
        seifert: None,
        module_h3: Some(ModulePresentation::cyclic(LaurentPoly::from_i64s(
            0,
            &[-1, 1],
        ))),
        mu: 1,
        singular_kind: SingularKind::DoublePointsOnly,
        construction: Construction::Base {
            label: "boundary of the normal bundle of an immersed 3-sphere, lifted".into(),
            n: 5,
        },
        provenance: vec![
            "mu = 1: connected S^2 x S^2 double-point set over the single double point of \
             the immersion (declared)"
                .into(),
            "H_3 of the infinite cyclic cover declared cyclic with relation t - 1; the zero \
             section generates"
                .into(),
        ],
    };
    Ok((k0.spin_to(n), k1.spin_to(n)))
}

/// Every base construction at its lowest dimension.
pub fn catalog() -> Vec<KnotDescriptor> {
    let (k0, k1) = theorem3_pair(MIN_HIGH_DIMENSION).expect("base dimension");
    vec![
        unknot(1).expect("base dimension"),
        trefoil_tower(1).expect("base dimension"),
        theorem1_knot(MIN_HIGH_DIMENSION).expect("base dimension"),
        k0,
        k1,
    ]
}

/// Seifert certificate when a matrix is present, otherwise the module triviality test.
pub fn certificate_of(k: &KnotDescriptor) -> Result<KnottednessCertificate> {
    match (&k.seifert, &k.module_h3) {
        (Some(s), _) => Ok(s.knottedness_certificate()),
        (None, Some(m)) => Ok(KnottednessCertificate::from_class(
            m.cyclic_class(),
            "order ideal of the declared H_3 presentation",
        )),
        (None, None) => Err(Error::NoAlgebraicData {
            name: k.name.clone(),
        }),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub description: String,
    pub passed: bool,
    pub evidence: String,
}

impl Check {
    fn new(description: impl Into<String>, passed: bool, evidence: impl Into<String>) -> Self {
        Check {
            description: description.into(),
            passed,
            evidence: evidence.into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: u8,
    pub n: u32,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub overall: bool,
}

impl TheoremReport {
    fn new(theorem: u8, n: u32, checks: Vec<Check>, notes: Vec<String>) -> Self {
        let overall = checks.iter().all(|c| c.passed);
        TheoremReport {
            theorem,
            n,
            checks,
            notes,
            overall,
        }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem {} (n = {})", self.theorem, self.n)?;
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "  [{mark}] {}: {}", c.description, c.evidence)?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        write!(f, "overall: {}", if self.overall { "PASS" } else { "FAIL" })
    }
}

fn class_of(s: &str) -> AlexanderClass {
    s.parse::<LaurentPoly>()
        .expect("literal polynomial")
        .canonicalize()
}

fn invariant_check(k: &KnotDescriptor) -> Check {
    match k.validate() {
        Ok(()) => Check::new(format!("{} descriptor invariants", k.name), true, "ok"),
        Err(e) => Check::new(
            format!("{} descriptor invariants", k.name),
            false,
            e.to_string(),
        ),
    }
}

pub fn verify_theorem1(n: u32) -> Result<TheoremReport> {
    let k = theorem1_knot(n)?;
    let expected = class_of("t^2 - 3t + 1");
    let cert = certificate_of(&k)?;
    let s = k
        .seifert
        .as_ref()
        .expect("theorem 1 knot carries a Seifert matrix");
    let checks = vec![
        invariant_check(&k),
        Check::new(
            "underlying manifold is a sphere",
            k.underlying == Underlying::Sphere,
            k.underlying.to_string(),
        ),
        Check::new(
            "singular set consists of double points",
            k.singular_kind == SingularKind::DoublePointsOnly,
            k.singular_kind.to_string(),
        ),
        Check::new("mu(P) = 2", k.mu == 2, format!("mu = {}", k.mu)),
        Check::new(
            "Seifert matrix is unimodular with q = 3",
            SeifertMatrix::new(s.matrix().clone(), 3).is_ok(),
            s.to_string(),
        ),
        Check::new(
            "Alexander class is t^2 - 3*t + 1",
            cert.evidence() == &expected,
            cert.evidence().to_string(),
        ),
        Check::new(
            "certificate is truly knotted",
            cert.verdict() == Verdict::TrulyKnotted,
            cert.verdict().to_string(),
        ),
        Check::new(
            "reached from n = 5 by spinning",
            k.construction.spin_count() == n - MIN_HIGH_DIMENSION,
            format!("{} spins", k.construction.spin_count()),
        ),
    ];
    Ok(TheoremReport::new(1, n, checks, Vec::new()))
}

/// The eight Seifert matrices `(±1 ±1; 0 ±1)` a knot with the two-component
/// projection can carry, in the fixed order diagonal-left, off-diagonal, diagonal-right.
pub fn theorem2_candidates() -> Vec<SeifertMatrix> {
    let mut out = Vec::with_capacity(8);
    for a in [1, -1] {
        for b in [1, -1] {
            for d in [1, -1] {
                out.push(seifert_2x2(a, b, 0, d, 3));
            }
        }
    }
    out
}

pub fn verify_theorem2(n: u32) -> Result<TheoremReport> {
    require_dimension(n, MIN_HIGH_DIMENSION)?;
    let projection = theorem1_knot(MIN_HIGH_DIMENSION)?;
    let mut checks = Vec::with_capacity(8);
    let mut distinct: Vec<AlexanderClass> = Vec::new();
    for s in theorem2_candidates() {
        let lift = KnotDescriptor {
            name: format!("lift [{}]", s.matrix()),
            seifert: Some(s.clone()),
            ..projection.clone()
        }
        .spin_to(n);
        let valid = SeifertMatrix::new(s.matrix().clone(), 3).is_ok();
        let cert = certificate_of(&lift)?;
        let class = cert.evidence().clone();
        let passed = valid && !class.is_unit() && cert.verdict() == Verdict::TrulyKnotted;
        checks.push(Check::new(
            format!("Seifert matrix {} (q = 3)", s.matrix()),
            passed,
            format!(
                "delta = {class}, {}",
                if class.is_unit() { "unit" } else { "non-unit" }
            ),
        ));
        if !distinct.contains(&class) {
            distinct.push(class);
        }
    }
    let classes: Vec<String> = distinct.iter().map(|c| c.to_string()).collect();
    let notes = vec![
        format!("distinct classes: {}", classes.join(", ")),
        "no knot with this projection has a unit Alexander class, hence none is unknotted".into(),
    ];
    Ok(TheoremReport::new(2, n, checks, notes))
}

pub fn verify_theorem3(n: u32) -> Result<TheoremReport> {
    let (k0, k1) = theorem3_pair(n)?;
    let m0 = k0.module_h3.as_ref().expect("K0 carries a module");
    let m1 = k1.module_h3.as_ref().expect("K1 carries a module");
    let mut checks = vec![
        invariant_check(&k0),
        invariant_check(&k1),
        Check::new(
            "K0 and K1 have the same underlying manifold",
            k0.underlying == k1.underlying,
            k0.underlying.to_string(),
        ),
        Check::new(
            "mu(P0) = 0 with empty singular set",
            k0.mu == 0 && k0.singular_kind == SingularKind::None,
            format!("mu = {}, {}", k0.mu, k0.singular_kind),
        ),
        Check::new(
            "mu(P1) = 1 with double points only",
            k1.mu == 1 && k1.singular_kind == SingularKind::DoublePointsOnly,
            format!("mu = {}, {}", k1.mu, k1.singular_kind),
        ),
        Check::new(
            "H_3(X_K0) is trivial",
            m0.is_trivial(),
            format!("order ideal ({})", m0.cyclic_class()),
        ),
        Check::new(
            "H_3(X_K1) is nontrivial",
            !m1.is_trivial(),
            format!("order ideal ({})", m1.cyclic_class()),
        ),
    ];
    for v in k1.orientation_variants() {
        let m = v.module_h3.as_ref().expect("variants keep the module");
        let check = match m0.same_cyclic_module(m) {
            Ok(same) => Check::new(
                format!("K0 is distinguished from {}", v.name),
                !same,
                format!("0 vs ({})", m.cyclic_class()),
            ),
            Err(e) => Check::new(
                format!("K0 is distinguished from {}", v.name),
                false,
                e.to_string(),
            ),
        };
        checks.push(check);
    }
    Ok(TheoremReport::new(3, n, checks, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_examples() {
        let k = theorem1_knot(5).unwrap();
        let s = k.spin();
        assert_eq!((s.n, s.mu), (6, 2));
        assert_eq!(s.seifert, k.seifert);
        assert_eq!(s.alexander_class(), k.alexander_class());

        let u = unknot(1).unwrap().spin();
        assert_eq!((u.n, u.mu), (2, 0));
        assert_eq!(u.singular_kind, SingularKind::None);
        u.validate().unwrap();
    }

    #[test]
    fn theorem1_examples() {
        let k = theorem1_knot(5).unwrap();
        assert_eq!(k.mu, 2);
        assert_eq!(k.alexander_class().unwrap(), class_of("t^2 - 3t + 1"));
        assert_eq!(certificate_of(&k).unwrap().verdict(), Verdict::TrulyKnotted);

        let k8 = theorem1_knot(8).unwrap();
        assert_eq!(k8.construction.spin_count(), 3);
        assert_eq!(k8.mu, 2);
        assert_eq!(k8.alexander_class(), k.alexander_class());

        assert_eq!(
            theorem1_knot(4),
            Err(Error::DimensionTooSmall { n: 4, min: 5 })
        );
    }

    #[test]
    fn trefoil_examples() {
        let k = trefoil_tower(1).unwrap();
        assert_eq!(k.mu, 3);
        assert_eq!(k.alexander_class().unwrap(), class_of("t^2 - t + 1"));
        let k4 = trefoil_tower(4).unwrap();
        assert_eq!((k4.n, k4.mu), (4, 3));
        assert_eq!(k4.alexander_class(), k.alexander_class());
        for n in 1..=8 {
            let c = certificate_of(&trefoil_tower(n).unwrap()).unwrap();
            assert_eq!(c.verdict(), Verdict::TrulyKnotted);
        }
        assert!(trefoil_tower(0).is_err());
    }

    #[test]
    fn theorem3_examples() {
        let (k0, k1) = theorem3_pair(5).unwrap();
        assert!(k0.module_h3.as_ref().unwrap().is_trivial());
        assert!(!k1.module_h3.as_ref().unwrap().is_trivial());
        for n in 5..=9 {
            let (k0, k1) = theorem3_pair(n).unwrap();
            assert_eq!((k0.mu, k0.singular_kind), (0, SingularKind::None));
            let same = k0
                .module_h3
                .as_ref()
                .unwrap()
                .same_cyclic_module(k1.module_h3.as_ref().unwrap())
                .unwrap();
            assert!(!same);
        }
        assert!(theorem3_pair(4).is_err());
    }

    #[test]
    fn theorem2_examples() {
        let cands = theorem2_candidates();
        assert_eq!(cands.len(), 8);
        assert_eq!(cands[0].matrix().to_string(), "1,1;0,1");
        assert_eq!(cands[1].matrix().to_string(), "1,1;0,-1");
        assert_eq!(cands[7].matrix().to_string(), "-1,-1;0,-1");
        assert_eq!(cands[1].alexander_class(), class_of("t^2 - 3t + 1"));
        assert_eq!(cands[0].alexander_class(), class_of("t^2 - t + 1"));
        let r = verify_theorem2(5).unwrap();
        assert!(r.overall);
        assert_eq!(r.checks.len(), 8);
    }

    #[test]
    fn certificate_routing() {
        let c = certificate_of(&unknot(3).unwrap()).unwrap();
        assert_eq!(c.verdict(), Verdict::NotDistinguished);
        let (k0, k1) = theorem3_pair(5).unwrap();
        let c1 = certificate_of(&k1).unwrap();
        assert_eq!(c1.verdict(), Verdict::TrulyKnotted);
        assert_eq!(c1.evidence(), &class_of("t - 1"));
        assert_eq!(
            certificate_of(&k0).unwrap().verdict(),
            Verdict::NotDistinguished
        );
        let bare = KnotDescriptor {
            module_h3: None,
            ..k0
        };
        assert!(matches!(
            certificate_of(&bare),
            Err(Error::NoAlgebraicData { .. })
        ));
    }

    #[test]
    fn validate_rejects_incoherent_descriptors() {
        let k = theorem1_knot(5).unwrap();
        let bad_mu = KnotDescriptor { mu: 0, ..k.clone() };
        assert!(bad_mu.validate().is_err());
        let bad_n = KnotDescriptor { n: 6, ..k.clone() };
        assert!(bad_n.validate().is_err());
        let bad_kind = KnotDescriptor {
            singular_kind: SingularKind::None,
            ..k.clone()
        };
        assert!(bad_kind.validate().is_err());
        let bad_manifold = KnotDescriptor {
            underlying: Underlying::ProductS3xS2,
            ..k
        };
        assert!(bad_manifold.validate().is_err());
    }

    #[test]
    fn json_round_trip() {
        for k in catalog().into_iter().chain([theorem1_knot(8).unwrap()]) {
            let s = k.to_json().unwrap();
            assert_eq!(KnotDescriptor::from_json(&s).unwrap(), k);
        }
        let all = catalog();
        assert_eq!(
            catalog_from_json(&catalog_to_json(&all).unwrap()).unwrap(),
            all
        );
    }

    #[test]
    fn json_schema_shape() {
        let v: serde_json::Value =
            serde_json::from_str(&theorem1_knot(6).unwrap().to_json().unwrap()).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["seifert"]["matrix"], "1,1;0,-1");
        assert_eq!(v["seifert"]["q"], 3);
        assert!(v["module"].is_null());
        assert_eq!(v["underlying"], "sphere");
        assert_eq!(v["singular_kind"], "double_points_only");
        assert_eq!(v["construction"]["spin"]["base"]["n"], 5);

        let (_, k1) = theorem3_pair(5).unwrap();
        let v: serde_json::Value = serde_json::from_str(&k1.to_json().unwrap()).unwrap();
        assert_eq!(v["module"]["presentation"], "t - 1");
        assert_eq!(v["underlying"], "product_s3xs2");
    }

    #[test]
    fn json_rejects_bad_documents() {
        let s = theorem1_knot(5).unwrap().to_json().unwrap();
        let bumped = s.replace("\"version\": 1", "\"version\": 2");
        assert!(KnotDescriptor::from_json(&bumped).is_err());
        let broken = s.replace("1,1;0,-1", "1,0;0,1");
        assert!(matches!(
            KnotDescriptor::from_json(&broken),
            Err(Error::NonUnimodular { .. })
        ));
        let wrong_n = s.replace("\"n\": 5,\n  \"underlying\"", "\"n\": 7,\n  \"underlying\"");
        assert!(KnotDescriptor::from_json(&wrong_n).is_err());
    }
}
