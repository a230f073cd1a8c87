"""jsonduel: differential testing of JSON engines, driven by LLM-regenerated
test scripts with JSON-specific mutation prompting and failure triage."""

__version__ = "0.1.0"
