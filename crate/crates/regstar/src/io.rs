//! JSON documents for every data type, with conversions to the checked types.

use serde::{Deserialize, Serialize};

use crate::constructions::{Group, SandwichMatrix, SimpleGraph};
use crate::cpg::ChainedProjectionGroupoid;
use crate::diagram::Partition;
use crate::error::{structure, Error, Result};
use crate::groupoid::{GroupoidParts, OrderedGroupoid};
use crate::palg::ProjectionAlgebra;
use crate::semigroup::StarSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    pub size: usize,
    pub mul: Vec<Vec<u32>>,
    pub star: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
}

/// `theta[q][p]` is qθ_p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalgDoc {
    pub size: usize,
    pub theta: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub size: usize,
    pub mul: Vec<Vec<u32>>,
}

/// `entries[p][q]` is m_pq as a group index, `null` for zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichDoc {
    pub group: GroupDoc,
    pub entries: Vec<Vec<Option<usize>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub dom: usize,
    pub cod: usize,
}

/// `compose` holds [a, b, a∘b]; `restrict` holds [p, a, ₚ⇂a].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub palg: Option<PalgDoc>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: Vec<usize>,
    pub compose: Vec<[usize; 3]>,
    pub invert: Vec<usize>,
    pub restrict: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// `eps` holds [p, q, ε[p,q]].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleDoc {
    pub palg: PalgDoc,
    pub groupoid: GroupoidDoc,
    pub eps: Vec<[usize; 3]>,
}

impl From<&StarSemigroup> for SemigroupDoc {
    fn from(s: &StarSemigroup) -> Self {
        SemigroupDoc { size: s.size(), mul: s.rows(), star: s.star_table().to_vec(), labels: s.labels().map(|l| l.to_vec()) }
    }
}

impl TryFrom<SemigroupDoc> for StarSemigroup {
    type Error = Error;
    fn try_from(d: SemigroupDoc) -> Result<Self> {
        if d.mul.len() != d.size {
            return structure(format!("size is {} but mul has {} rows", d.size, d.mul.len()));
        }
        StarSemigroup::from_rows(d.mul, d.star, d.labels)
    }
}

impl From<&Partition> for PartitionDoc {
    fn from(p: &Partition) -> Self {
        PartitionDoc { n: p.degree(), blocks: p.blocks() }
    }
}

impl TryFrom<PartitionDoc> for Partition {
    type Error = Error;
    fn try_from(d: PartitionDoc) -> Result<Self> {
        Partition::from_blocks(d.n, &d.blocks)
    }
}

impl From<&ProjectionAlgebra> for PalgDoc {
    fn from(p: &ProjectionAlgebra) -> Self {
        PalgDoc { size: p.size(), theta: p.rows(), labels: p.labels().map(|l| l.to_vec()) }
    }
}

impl TryFrom<PalgDoc> for ProjectionAlgebra {
    type Error = Error;
    fn try_from(d: PalgDoc) -> Result<Self> {
        if d.theta.len() != d.size {
            return structure(format!("size is {} but theta has {} rows", d.size, d.theta.len()));
        }
        ProjectionAlgebra::from_rows(d.theta, d.labels)
    }
}

impl From<&SimpleGraph> for GraphDoc {
    fn from(g: &SimpleGraph) -> Self {
        GraphDoc { vertices: g.vertices(), edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

impl TryFrom<GraphDoc> for SimpleGraph {
    type Error = Error;
    fn try_from(d: GraphDoc) -> Result<Self> {
        let edges: Vec<(usize, usize)> = d.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::new(d.vertices, &edges)
    }
}

impl From<&SandwichMatrix> for SandwichDoc {
    fn from(m: &SandwichMatrix) -> Self {
        let g = m.group();
        SandwichDoc { group: GroupDoc { size: g.size(), mul: g.rows() }, entries: m.entries().to_vec() }
    }
}

impl TryFrom<SandwichDoc> for SandwichMatrix {
    type Error = Error;
    fn try_from(d: SandwichDoc) -> Result<Self> {
        if d.group.mul.len() != d.group.size {
            return structure("group size does not match its table");
        }
        SandwichMatrix::new(Group::from_rows(d.group.mul)?, d.entries)
    }
}

impl GroupoidDoc {
    fn from_groupoid(g: &OrderedGroupoid, with_palg: bool) -> Self {
        let p = g.to_parts();
        GroupoidDoc {
            palg: with_palg.then(|| PalgDoc::from(&p.palg)),
            morphisms: p.dom.iter().zip(&p.cod).map(|(&dom, &cod)| MorphismDoc { dom, cod }).collect(),
            identities: p.identities,
            compose: p.compose.into_iter().map(|(a, b, c)| [a, b, c]).collect(),
            invert: p.invert,
            restrict: p.restrict.into_iter().map(|(a, b, c)| [a, b, c]).collect(),
            labels: p.labels,
        }
    }

    fn into_groupoid(self, palg: ProjectionAlgebra) -> Result<OrderedGroupoid> {
        OrderedGroupoid::from_parts(GroupoidParts {
            palg,
            identities: self.identities,
            dom: self.morphisms.iter().map(|m| m.dom).collect(),
            cod: self.morphisms.iter().map(|m| m.cod).collect(),
            invert: self.invert,
            compose: self.compose.into_iter().map(|c| (c[0], c[1], c[2])).collect(),
            restrict: self.restrict.into_iter().map(|c| (c[0], c[1], c[2])).collect(),
            labels: self.labels,
        })
    }
}

impl From<&OrderedGroupoid> for GroupoidDoc {
    fn from(g: &OrderedGroupoid) -> Self {
        GroupoidDoc::from_groupoid(g, true)
    }
}

impl TryFrom<GroupoidDoc> for OrderedGroupoid {
    type Error = Error;
    fn try_from(mut d: GroupoidDoc) -> Result<Self> {
        let palg = match d.palg.take() {
            Some(p) => ProjectionAlgebra::try_from(p)?,
            None => return structure("standalone groupoid needs a palg block"),
        };
        d.into_groupoid(palg)
    }
}

impl From<&ChainedProjectionGroupoid> for TripleDoc {
    fn from(t: &ChainedProjectionGroupoid) -> Self {
        TripleDoc {
            palg: PalgDoc::from(t.palg()),
            groupoid: GroupoidDoc::from_groupoid(t.groupoid(), false),
            eps: t.eps_entries().into_iter().map(|(p, q, a)| [p, q, a]).collect(),
        }
    }
}

impl TryFrom<TripleDoc> for ChainedProjectionGroupoid {
    type Error = Error;
    fn try_from(d: TripleDoc) -> Result<Self> {
        let palg = ProjectionAlgebra::try_from(d.palg)?;
        let g = d.groupoid.into_groupoid(palg)?;
        let eps: Vec<(usize, usize, usize)> = d.eps.iter().map(|e| (e[0], e[1], e[2])).collect();
        ChainedProjectionGroupoid::new(g, &eps)
    }
}

/// Parses any document type from JSON, mapping serde errors (with line and
/// column) to structural errors.
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Structure(format!("JSON parse error at line {} column {}: {}", e.line(), e.column(), e)))
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}
