"""grpmat - finite groups encoded as 0/1 matrices and recovered from XB = BY"""
__version__ = "1.0.0"
