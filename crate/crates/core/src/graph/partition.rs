use crate::error::{Error, Result};

/// Ordered, disjoint, nonempty vertex blocks covering `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    order: usize,
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(order: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; order];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= order {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} in block {i} is out of range for order {order}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Self { order, blocks })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}
