# Unit tests package.
