"""QueryLean: query-efficient black-box text attacks and their benchmark harness."""
