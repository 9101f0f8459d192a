import os
from pathlib import Path

DATA_DIR = Path("data")
REPORT_MD_PATH = Path("report.md")
REPORT_JSON_NAME = "report_g{g}_n{n}.json"
CERTIFICATES_JSON_NAME = "certificates_g{g}_n{n}.json"

# (genus, punctures) pairs the pipeline verifies on every run
ACCEPTANCE_CONFIGS = ((13, 5), (13, 7), (15, 5), (16, 4), (16, 6))

# Sym_n sweep bounds
SYMN_MAX = 11
ORACLE_MAX = 7

# Evaluators kept alive for the module-level eval_word/check_identity helpers
EVALUATOR_CACHE_SIZE = 8

# Mutation harness
MUTATION_COUNT = 50
MUTATION_SEED = int(os.getenv("CROSSCAP_MUTATION_SEED", "0"))

# Worker pool configuration
WORKERS = (
    int(os.getenv("CROSSCAP_WORKERS", "0")) or None
)  # 0 or empty lets the executor decide
