//! Holds the workspace-level acceptance test target; no library code.
