use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A total map between two groups, given element by element.
#[derive(Clone)]
pub struct GroupMap<'g> {
    source: &'g FiniteGroup,
    target: &'g FiniteGroup,
    image: Vec<usize>,
}

impl fmt::Debug for GroupMap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupMap")
            .field("image", &self.image)
            .finish()
    }
}

impl PartialEq for GroupMap<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.source, other.source)
            && std::ptr::eq(self.target, other.target)
            && self.image == other.image
    }
}

impl Eq for GroupMap<'_> {}

impl<'g> GroupMap<'g> {
    pub fn new(
        source: &'g FiniteGroup,
        target: &'g FiniteGroup,
        image: Vec<usize>,
    ) -> Result<Self> {
        if image.len() != source.order() {
            return Err(Error::InvalidSpec(format!(
                "map defined on {} elements, source has {}",
                image.len(),
                source.order()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&v| v >= target.order()) {
            return Err(Error::InvalidIndex {
                index: bad,
                order: target.order(),
            });
        }
        Ok(GroupMap {
            source,
            target,
            image,
        })
    }

    /// Endomorphism-shaped map on `g`.
    pub fn on(g: &'g FiniteGroup, image: Vec<usize>) -> Result<Self> {
        Self::new(g, g, image)
    }

    pub fn identity(g: &'g FiniteGroup) -> Self {
        GroupMap {
            source: g,
            target: g,
            image: (0..g.order()).collect(),
        }
    }

    /// The inner map `x -> y^-1 x y`.
    pub fn conjugation(g: &'g FiniteGroup, y: usize) -> Self {
        let yi = g.inv(y);
        let image = (0..g.order()).map(|x| g.mul(g.mul(yi, x), y)).collect();
        GroupMap {
            source: g,
            target: g,
            image,
        }
    }

    pub fn source(&self) -> &'g FiniteGroup {
        self.source
    }

    pub fn target(&self) -> &'g FiniteGroup {
        self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `self ∘ other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &GroupMap<'g>) -> GroupMap<'g> {
        let image = other.image.iter().map(|&y| self.image[y]).collect();
        GroupMap {
            source: other.source,
            target: self.target,
            image,
        }
    }

    pub fn is_identity(&self) -> bool {
        std::ptr::eq(self.source, self.target)
            && self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        self.image
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }
}

/// `x^-1 map(x)`, the centrality witness of an endomorphism.
pub fn displacement(map: &GroupMap<'_>, x: usize) -> usize {
    let g = map.source();
    g.mul(g.inv(x), map.apply(x))
}
