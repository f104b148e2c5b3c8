"""Package initializer for Summand_Lab."""
