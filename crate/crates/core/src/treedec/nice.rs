//! Conversion of a tree decomposition into nice form: a rooted tree of
//! Leaf, Introduce, Forget, and Join nodes with empty root and leaf bags.
//! The conversion is canonical, so equal inputs produce equal trees:
//! between adjacent bags vertices are forgotten in ascending id order and
//! then introduced in ascending id order, multi-child nodes become
//! left-leaning Join chains over children in ascending id order, and the
//! root bag is emptied by a final chain of Forget nodes.

use super::TreeDecomposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce { vertex: usize },
    Forget { vertex: usize },
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    /// Sorted vertex ids.
    pub bag: Vec<usize>,
    /// Empty for Leaf, one child for Introduce/Forget, two for Join.
    pub children: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    nodes: Vec<NiceNode>,
    root: usize,
}

impl NiceTreeDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &NiceNode {
        &self.nodes[i]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn max_bag_size(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    /// Children-before-parent order, computed iteratively so deep chains do
    /// not overflow the stack.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((node, expanded)) = stack.pop() {
            if expanded {
                out.push(node);
            } else {
                stack.push((node, true));
                for &c in self.nodes[node].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// The same bags and tree edges as a plain decomposition, for reuse of
    /// [`super::validate_decomposition`].
    pub fn as_tree_decomposition(&self) -> TreeDecomposition {
        let mut td = TreeDecomposition::new();
        for node in &self.nodes {
            td.add_bag(node.bag.clone());
        }
        for (i, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                td.add_tree_edge(i, c);
            }
        }
        td
    }

    /// Checks the structural invariants of the nice form: empty root and
    /// leaf bags, Introduce/Forget bags differing from the child bag by
    /// exactly the named vertex, and Join nodes with two equal-bag children.
    pub fn validate_structure(&self) -> Result<(), String> {
        if !self.nodes[self.root].bag.is_empty() {
            return Err("root bag is not empty".to_string());
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if node.bag.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("bag of node {} is not sorted and unique", i));
            }
            match node.kind {
                NodeKind::Leaf => {
                    if !node.children.is_empty() {
                        return Err(format!("leaf node {} has children", i));
                    }
                    if !node.bag.is_empty() {
                        return Err(format!("leaf node {} has a non-empty bag", i));
                    }
                }
                NodeKind::Introduce { vertex } => {
                    if node.children.len() != 1 {
                        return Err(format!("introduce node {} must have one child", i));
                    }
                    let child = &self.nodes[node.children[0]];
                    if child.bag.binary_search(&vertex).is_ok() {
                        return Err(format!("node {} introduces a vertex already present", i));
                    }
                    let mut expected = child.bag.clone();
                    let pos = expected.binary_search(&vertex).unwrap_err();
                    expected.insert(pos, vertex);
                    if expected != node.bag {
                        return Err(format!("introduce node {} bag mismatch", i));
                    }
                }
                NodeKind::Forget { vertex } => {
                    if node.children.len() != 1 {
                        return Err(format!("forget node {} must have one child", i));
                    }
                    let child = &self.nodes[node.children[0]];
                    let pos = match child.bag.binary_search(&vertex) {
                        Ok(p) => p,
                        Err(_) => {
                            return Err(format!("node {} forgets an absent vertex", i));
                        }
                    };
                    let mut expected = child.bag.clone();
                    expected.remove(pos);
                    if expected != node.bag {
                        return Err(format!("forget node {} bag mismatch", i));
                    }
                }
                NodeKind::Join => {
                    if node.children.len() != 2 {
                        return Err(format!("join node {} must have two children", i));
                    }
                    for &c in &node.children {
                        if self.nodes[c].bag != node.bag {
                            return Err(format!("join node {} children bags differ", i));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Converts `td` into nice form, preserving the width exactly. The input
/// tree is rooted at node 0.
pub fn make_nice(td: &TreeDecomposition) -> NiceTreeDecomposition {
    assert!(td.n_nodes() > 0, "decomposition has no nodes");

    // Root at 0; children in ascending id order.
    let n = td.n_nodes();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        order.push(x);
        let mut ns: Vec<usize> = td.neighbors(x).to_vec();
        ns.sort_unstable();
        for y in ns {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                children[x].push(y);
                stack.push(y);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "node graph must be connected");

    let mut builder = Builder { nodes: Vec::new() };
    // top[t]: index of the nice node carrying bag(t) for the finished
    // subtree of original node t.
    let mut top: Vec<Option<usize>> = vec![None; n];

    for &t in order.iter().rev() {
        let bag = td.bag(t);
        let branch = if children[t].is_empty() {
            let mut cur = builder.push(NodeKind::Leaf, Vec::new(), vec![]);
            for &v in bag {
                cur = builder.introduce(cur, v);
            }
            cur
        } else {
            let mut branches = Vec::with_capacity(children[t].len());
            for &c in &children[t] {
                let mut cur = top[c].expect("children processed first");
                let child_bag = td.bag(c);
                for &v in child_bag.iter().filter(|v| !contains(bag, **v)) {
                    cur = builder.forget(cur, v);
                }
                for &v in bag.iter().filter(|v| !contains(child_bag, **v)) {
                    cur = builder.introduce(cur, v);
                }
                branches.push(cur);
            }
            let mut acc = branches[0];
            for &b in &branches[1..] {
                acc = builder.push(NodeKind::Join, bag.to_vec(), vec![acc, b]);
            }
            acc
        };
        top[t] = Some(branch);
    }

    // Empty the root bag with a final forget chain.
    let mut root = top[0].expect("root processed");
    for &v in td.bag(0) {
        root = builder.forget(root, v);
    }

    NiceTreeDecomposition {
        nodes: builder.nodes,
        root,
    }
}

fn contains(sorted: &[usize], v: usize) -> bool {
    sorted.binary_search(&v).is_ok()
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    fn introduce(&mut self, child: usize, vertex: usize) -> usize {
        let mut bag = self.nodes[child].bag.clone();
        let pos = bag.binary_search(&vertex).unwrap_err();
        bag.insert(pos, vertex);
        self.push(NodeKind::Introduce { vertex }, bag, vec![child])
    }

    fn forget(&mut self, child: usize, vertex: usize) -> usize {
        let mut bag = self.nodes[child].bag.clone();
        let pos = bag.binary_search(&vertex).expect("vertex present in child bag");
        bag.remove(pos);
        self.push(NodeKind::Forget { vertex }, bag, vec![child])
    }
}
