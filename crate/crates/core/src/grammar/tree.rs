//! Derivation trees: sampled parses that keep constituency so structural
//! facts are computed, not guessed from strings.

use super::lexicon::{LexEntry, Token};

#[derive(Debug, Clone, PartialEq)]
pub enum TreeNode {
    Branch {
        symbol: String,
        children: Vec<TreeNode>,
        /// Half-open `[start, end)` indices into the yield.
        span: (usize, usize),
    },
    Leaf {
        token: Token,
        /// Lexical category the token was drawn from; `None` for literals.
        category: Option<String>,
        /// The lexicon entry behind the token, when any.
        entry: Option<LexEntry>,
        /// Position in the yield.
        index: usize,
    },
}

impl TreeNode {
    pub fn branch(symbol: &str, children: Vec<TreeNode>) -> TreeNode {
        TreeNode::Branch {
            symbol: symbol.to_string(),
            children,
            span: (0, 0),
        }
    }

    pub fn leaf(category: &str, entry: LexEntry) -> TreeNode {
        TreeNode::Leaf {
            token: Token::word(&entry.surface),
            category: Some(category.to_string()),
            entry: Some(entry),
            index: 0,
        }
    }

    pub fn literal(text: &str) -> TreeNode {
        TreeNode::Leaf {
            token: Token::literal(text),
            category: None,
            entry: None,
            index: 0,
        }
    }

    pub fn symbol(&self) -> Option<&str> {
        match self {
            TreeNode::Branch { symbol, .. } => Some(symbol),
            TreeNode::Leaf { .. } => None,
        }
    }

    pub fn children(&self) -> &[TreeNode] {
        match self {
            TreeNode::Branch { children, .. } => children,
            TreeNode::Leaf { .. } => &[],
        }
    }

    /// Leaf category, when this node is a category leaf.
    pub fn category(&self) -> Option<&str> {
        match self {
            TreeNode::Leaf { category, .. } => category.as_deref(),
            TreeNode::Branch { .. } => None,
        }
    }

    fn renumber(&mut self, next: &mut usize) -> (usize, usize) {
        match self {
            TreeNode::Leaf { index, .. } => {
                *index = *next;
                *next += 1;
                (*index, *index + 1)
            }
            TreeNode::Branch { children, span, .. } => {
                let start = *next;
                for c in children.iter_mut() {
                    c.renumber(next);
                }
                *span = (start, *next);
                *span
            }
        }
    }
}

/// A complete sampled derivation. `task` records which task grammar produced
/// it so structural queries know which schema to apply.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationTree {
    pub task: String,
    pub root: TreeNode,
}

impl DerivationTree {
    /// Build a tree, assigning leaf indices and spans left to right.
    pub fn new(task: &str, mut root: TreeNode) -> DerivationTree {
        let mut next = 0;
        root.renumber(&mut next);
        DerivationTree {
            task: task.to_string(),
            root,
        }
    }

    /// Left-to-right leaves, terminal punctuation included.
    pub fn yield_tokens(&self) -> Vec<Token> {
        let mut out = Vec::new();
        collect_leaves(&self.root, &mut out);
        out
    }

    /// The yield as plain strings.
    pub fn yield_strings(&self) -> Vec<String> {
        self.yield_tokens().into_iter().map(|t| t.text).collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.yield_tokens().len()
    }
}

fn collect_leaves(node: &TreeNode, out: &mut Vec<Token>) {
    match node {
        TreeNode::Leaf { token, .. } => out.push(token.clone()),
        TreeNode::Branch { children, .. } => {
            for c in children {
                collect_leaves(c, out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_leaf_yield() {
        let t = DerivationTree::new("question", TreeNode::literal("sing"));
        assert_eq!(t.yield_strings(), vec!["sing"]);
    }

    #[test]
    fn spans_are_contiguous_and_nested() {
        let t = DerivationTree::new(
            "question",
            TreeNode::branch(
                "S",
                vec![
                    TreeNode::branch(
                        "NP_S",
                        vec![TreeNode::literal("the"), TreeNode::literal("boy")],
                    ),
                    TreeNode::literal("."),
                ],
            ),
        );
        match &t.root {
            TreeNode::Branch { span, children, .. } => {
                assert_eq!(*span, (0, 3));
                match &children[0] {
                    TreeNode::Branch { span, .. } => assert_eq!(*span, (0, 2)),
                    _ => panic!("expected branch"),
                }
            }
            _ => panic!("expected branch"),
        }
        assert_eq!(t.leaf_count(), 3);
    }
}
