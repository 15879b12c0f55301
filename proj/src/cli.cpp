namespace bbp {}
