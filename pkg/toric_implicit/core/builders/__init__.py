from toric_implicit.core.builders.embedding_builder import EMBEDDING_CHOICES, EmbeddingBuilder

__all__ = ["EMBEDDING_CHOICES", "EmbeddingBuilder"]
