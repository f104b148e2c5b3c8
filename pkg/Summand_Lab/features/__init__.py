"""Feature packages, one per algebra area"""
