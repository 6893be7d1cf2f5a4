# Unit Tests
