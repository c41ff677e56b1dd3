use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

/// Variables every table starts with, in term-order priority.
pub const CANONICAL_VARS: [&str; 10] = ["x", "y", "u", "A", "t", "k", "x0", "y0", "w", "v"];

const N_CANONICAL: usize = CANONICAL_VARS.len();

/// Mapping between variable ids and printable names.
///
/// Ids `0..10` are always [`CANONICAL_VARS`]; extra names follow, sorted.
#[derive(Clone, Debug, Default)]
pub struct VarTable {
    extra: Option<Arc<[String]>>,
}

impl VarTable {
    pub fn canonical() -> Self {
        VarTable { extra: None }
    }

    /// Table that can hold `name` (the canonical table if `name` is canonical).
    pub fn containing(name: &str) -> Self {
        if CANONICAL_VARS.contains(&name) {
            Self::canonical()
        } else {
            VarTable {
                extra: Some(Arc::from(alloc::vec![name.to_string()])),
            }
        }
    }

    fn extras(&self) -> &[String] {
        self.extra.as_deref().unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        N_CANONICAL + self.extras().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn id(&self, name: &str) -> Option<u16> {
        if let Some(i) = CANONICAL_VARS.iter().position(|v| *v == name) {
            return Some(i as u16);
        }
        self.extras()
            .binary_search_by(|probe| probe.as_str().cmp(name))
            .ok()
            .map(|i| (i + N_CANONICAL) as u16)
    }

    pub fn name(&self, id: u16) -> &str {
        let id = id as usize;
        if id < N_CANONICAL {
            CANONICAL_VARS[id]
        } else {
            &self.extras()[id - N_CANONICAL]
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        CANONICAL_VARS
            .iter()
            .copied()
            .chain(self.extras().iter().map(String::as_str))
    }

    /// Union of two tables, with id remaps from each input into the union.
    ///
    /// Canonical ids never move, so a remap is the identity on `0..10`.
    pub(crate) fn merge(&self, other: &VarTable) -> (VarTable, Vec<u16>, Vec<u16>) {
        let mut names: Vec<String> = self
            .extras()
            .iter()
            .chain(other.extras())
            .cloned()
            .collect();
        names.sort();
        names.dedup();
        let merged = VarTable {
            extra: if names.is_empty() {
                None
            } else {
                Some(Arc::from(names))
            },
        };
        let remap = |t: &VarTable| -> Vec<u16> {
            (0..t.len() as u16)
                .map(|id| {
                    merged
                        .id(t.name(id))
                        .expect("merged table holds every name")
                })
                .collect()
        };
        let a = remap(self);
        let b = remap(other);
        (merged, a, b)
    }
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        match (&self.extra, &other.extra) {
            (None, None) => true,
            (Some(a), Some(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for VarTable {}
