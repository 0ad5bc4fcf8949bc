"""Anti-pattern rules, their shared predicates and the pattern catalogue"""
