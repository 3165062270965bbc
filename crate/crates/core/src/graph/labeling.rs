use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A named vertex or vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Role {
    Vertex(usize),
    Set(Vec<usize>),
}

impl Role {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Role::Vertex(v) => vec![*v],
            Role::Set(s) => s.clone(),
        }
    }
}

/// Symbolic names for the vertices of a constructed graph (`"x3"`, `"P1"`, `"U"`, ...).
///
/// Serializes as a flat JSON object mapping role name to index or index list.
/// Sets registered with [`VertexLabeling::insert_part`] form a partition and
/// must stay pairwise disjoint.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabeling {
    #[serde(flatten)]
    roles: BTreeMap<String, Role>,
    #[serde(skip)]
    parts: Vec<String>,
}

impl VertexLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert_vertex(&mut self, name: impl Into<String>, v: usize) {
        self.roles.insert(name.into(), Role::Vertex(v));
    }

    pub fn insert_set(&mut self, name: impl Into<String>, vs: Vec<usize>) {
        self.roles.insert(name.into(), Role::Set(vs));
    }

    /// Inserts a set that belongs to the disjoint partition.
    pub fn insert_part(&mut self, name: impl Into<String>, vs: Vec<usize>) {
        let name = name.into();
        self.parts.push(name.clone());
        self.roles.insert(name, Role::Set(vs));
    }

    pub fn get(&self, name: &str) -> Option<&Role> {
        self.roles.get(name)
    }

    /// Index of a single-vertex role. Panics on a missing role.
    pub fn vertex(&self, name: &str) -> usize {
        match self.roles.get(name) {
            Some(Role::Vertex(v)) => *v,
            other => panic!("role {name} is not a vertex: {other:?}"),
        }
    }

    /// Members of a role; empty for a missing role.
    pub fn set(&self, name: &str) -> Vec<usize> {
        self.roles.get(name).map(Role::vertices).unwrap_or_default()
    }

    pub fn roles(&self) -> impl Iterator<Item = (&str, &Role)> {
        self.roles.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| self.set(p)).collect()
    }

    /// Name of each vertex from its single-vertex role, if any.
    pub fn vertex_names(&self, n: usize) -> Vec<Option<String>> {
        let mut names = vec![None; n];
        for (name, role) in &self.roles {
            if let Role::Vertex(v) = role {
                if *v < n && names[*v].is_none() {
                    names[*v] = Some(name.clone());
                }
            }
        }
        // unnamed vertices fall back to the part holding them
        for part in &self.parts {
            for v in self.set(part) {
                if v < n && names[v].is_none() {
                    names[v] = Some(part.clone());
                }
            }
        }
        names
    }

    /// All indices are `< n` and partition parts are pairwise disjoint.
    pub fn validate(&self, n: usize) -> Result<()> {
        for role in self.roles.values() {
            if let Some(&v) = role.vertices().iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { index: v, limit: n });
            }
        }
        let mut owner = vec![false; n];
        for part in &self.parts {
            for v in self.set(part) {
                if owner[v] {
                    return Err(Error::InvalidParameters(format!(
                        "vertex {v} appears in two parts"
                    )));
                }
                owner[v] = true;
            }
        }
        Ok(())
    }
}
