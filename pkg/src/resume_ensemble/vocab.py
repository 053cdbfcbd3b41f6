"""Vocabulary pools for synthetic resumes and for mock-backend corruptions."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Profession:
    name: str
    department: str
    titles: tuple[str, ...]
    skills: tuple[str, ...]
    duties: tuple[str, ...]
    degrees: tuple[tuple[str, str], ...]  # (degree, field of study)


def _p(name, department, titles, skills, duties, degrees) -> Profession:
    return Profession(name, department, tuple(titles), tuple(skills), tuple(duties), tuple(degrees))


PROFESSIONS: tuple[Profession, ...] = (
    _p("Information-Technology", "Information Technology",
       ["Software Engineer", "Systems Administrator", "DevOps Engineer", "Backend Developer"],
       ["Python", "Java", "SQL", "JavaScript", "React", "Node.js", "Docker", "AWS", "Git", "Linux", "PostgreSQL"],
       ["the deployment pipeline for core services", "database migrations across regions",
        "internal monitoring dashboards", "a service handling two million daily requests",
        "code reviews for a team of six engineers", "legacy batch jobs into containers"],
       [("BSc", "Computer Science"), ("MSc", "Software Engineering"), ("BEng", "Information Systems")]),
    _p("Engineering", "Engineering",
       ["Mechanical Engineer", "Design Engineer", "Process Engineer", "Project Engineer"],
       ["AutoCAD", "MATLAB", "SolidWorks", "Python", "Project Management", "Six Sigma", "C++", "Quality Assurance"],
       ["finite element analysis of load-bearing parts", "prototype testing for a new pump line",
        "tolerance reviews with external suppliers", "a plant layout redesign",
        "root cause analysis for recurring defects", "technical documentation for product releases"],
       [("BEng", "Mechanical Engineering"), ("MEng", "Industrial Engineering"), ("BSc", "Civil Engineering")]),
    _p("Designer", "Design",
       ["Graphic Designer", "UI Designer", "Product Designer", "Visual Designer"],
       ["Adobe Photoshop", "Adobe Illustrator", "Figma", "UI Design", "UX Research", "Sketch", "Typography", "Adobe InDesign"],
       ["brand guidelines for a retail client", "wireframes for a mobile banking app",
        "usability sessions with twenty participants", "a reusable component library",
        "print layouts for quarterly catalogues", "marketing visuals for product launches"],
       [("BA", "Graphic Design"), ("BFA", "Visual Communication"), ("MA", "Interaction Design")]),
    _p("HR", "Human Resources",
       ["HR Generalist", "Recruiter", "HR Manager", "Talent Acquisition Specialist"],
       ["Recruiting", "Onboarding", "Payroll", "HRIS", "Employee Relations", "Performance Management", "Microsoft Excel", "Talent Acquisition"],
       ["end-to-end hiring for technical roles", "the annual performance review cycle",
        "onboarding for forty new employees per quarter", "payroll reconciliation for three sites",
        "employee engagement surveys", "a revised leave policy with legal counsel"],
       [("BA", "Human Resource Management"), ("MBA", "Organizational Behavior"), ("BSc", "Psychology")]),
    _p("Teacher", "Education",
       ["Mathematics Teacher", "Science Teacher", "Primary School Teacher", "English Teacher"],
       ["Curriculum Development", "Classroom Management", "Lesson Planning", "Google Classroom", "Microsoft Office", "Student Assessment", "Special Education"],
       ["weekly lesson plans for three grade levels", "after-school tutoring programs",
        "standardized test preparation sessions", "parent-teacher conferences each term",
        "a new science lab curriculum", "individual education plans for students"],
       [("BEd", "Elementary Education"), ("MEd", "Curriculum and Instruction"), ("BA", "English Literature")]),
    _p("Advocate", "Legal",
       ["Associate Attorney", "Legal Counsel", "Paralegal", "Litigation Associate"],
       ["Legal Research", "Litigation", "Contract Drafting", "Legal Writing", "Negotiation", "Case Management", "Westlaw"],
       ["discovery for commercial disputes", "commercial lease agreements",
        "client intake and case assessment", "briefs for appellate hearings",
        "settlement negotiations with opposing counsel", "regulatory filings for corporate clients"],
       [("LLB", "Law"), ("JD", "Law"), ("LLM", "Corporate Law")]),
    _p("Business-Development", "Business Development",
       ["Business Development Manager", "Partnerships Lead", "Account Executive", "Growth Manager"],
       ["Salesforce", "CRM", "Lead Generation", "Negotiation", "Market Research", "Business Strategy", "Microsoft Excel", "Account Management"],
       ["strategic partnerships in new markets", "the quarterly sales pipeline review",
        "pricing proposals for enterprise accounts", "market entry analysis for two regions",
        "a referral program for existing clients", "trade show participation and follow-up"],
       [("BBA", "Marketing"), ("MBA", "Business Administration"), ("BA", "Economics")]),
    _p("Healthcare", "Healthcare",
       ["Registered Nurse", "Medical Assistant", "Clinical Coordinator", "Patient Care Technician"],
       ["Patient Care", "EMR", "HIPAA Compliance", "CPR", "Medical Terminology", "Phlebotomy", "Clinical Documentation"],
       ["care plans for post-operative patients", "medication administration records",
        "triage in a busy emergency department", "patient education on chronic conditions",
        "infection control audits", "shift handovers for a twenty-bed ward"],
       [("BSN", "Nursing"), ("AAS", "Medical Assisting"), ("MSN", "Nursing Leadership")]),
    _p("Fitness", "Fitness",
       ["Personal Trainer", "Fitness Instructor", "Strength Coach", "Wellness Coordinator"],
       ["Personal Training", "Nutrition Planning", "CPR", "Group Fitness", "Strength Training", "Injury Prevention", "Client Assessment"],
       ["individual training programs for clients", "group classes of up to thirty members",
        "fitness assessments for new members", "a corporate wellness challenge",
        "rehabilitation routines with physiotherapists", "membership retention campaigns"],
       [("BSc", "Exercise Science"), ("BSc", "Kinesiology"), ("Diploma", "Sports Nutrition")]),
    _p("Agriculture", "Agriculture",
       ["Farm Manager", "Agronomist", "Agricultural Technician", "Crop Consultant"],
       ["Crop Management", "Irrigation", "Soil Science", "GIS", "Pest Management", "Farm Equipment Operation", "Sustainability"],
       ["seasonal planting schedules for six hundred acres", "soil sampling and nutrient plans",
        "drip irrigation installation", "yield mapping with field sensors",
        "pest scouting across client farms", "grant applications for conservation programs"],
       [("BSc", "Agronomy"), ("MSc", "Soil Science"), ("BSc", "Agricultural Engineering")]),
    _p("BPO", "Customer Operations",
       ["Customer Service Representative", "Team Leader", "Support Specialist", "Call Center Agent"],
       ["Customer Service", "Call Handling", "CRM", "Zendesk", "Data Entry", "Troubleshooting", "Ticketing Systems"],
       ["inbound calls for a telecom client", "escalated tickets within service levels",
        "quality audits of recorded calls", "training material for new agents",
        "billing disputes for enterprise customers", "daily performance reports for supervisors"],
       [("BA", "Communication"), ("BCom", "Commerce"), ("Diploma", "Business Administration")]),
    _p("Sales", "Sales",
       ["Sales Representative", "Account Manager", "Sales Manager", "Inside Sales Associate"],
       ["Salesforce", "Lead Generation", "Cold Calling", "Negotiation", "CRM", "Account Management", "Sales Forecasting"],
       ["a territory of one hundred retail accounts", "product demonstrations for prospects",
        "monthly revenue forecasts", "contract renewals with key customers",
        "a team of five sales associates", "upselling campaigns for existing clients"],
       [("BBA", "Sales Management"), ("BA", "Marketing"), ("BCom", "Business")]),
    _p("Consultant", "Consulting",
       ["Management Consultant", "Business Analyst", "Strategy Consultant", "Senior Consultant"],
       ["Business Analysis", "Stakeholder Management", "Microsoft Excel", "Microsoft PowerPoint", "Process Improvement", "Data Analysis", "Change Management"],
       ["operating model reviews for retail clients", "cost reduction workshops with executives",
        "process maps for procurement teams", "board-level presentations",
        "a post-merger integration plan", "customer segmentation analysis"],
       [("MBA", "Strategy"), ("BSc", "Economics"), ("MSc", "Management")]),
    _p("Digital-Media", "Marketing",
       ["Digital Marketing Specialist", "Content Strategist", "SEO Analyst", "Social Media Manager"],
       ["SEO", "Google Analytics", "Content Marketing", "Social Media Marketing", "Adobe Premiere Pro", "Copywriting", "WordPress"],
       ["editorial calendars for three brands", "paid social campaigns with monthly budgets",
        "keyword research for landing pages", "video content for product launches",
        "weekly traffic and conversion reports", "a newsletter with forty thousand subscribers"],
       [("BA", "Media Studies"), ("BA", "Journalism"), ("MA", "Digital Marketing")]),
    _p("Automobile", "Automotive",
       ["Automotive Technician", "Service Advisor", "Production Supervisor", "Quality Engineer"],
       ["Vehicle Diagnostics", "Engine Repair", "AutoCAD", "Quality Control", "Lean Manufacturing", "Electrical Systems", "Preventive Maintenance"],
       ["diagnostics on hybrid drivetrains", "warranty claims for dealership repairs",
        "assembly line quality checks", "preventive maintenance schedules for fleet vehicles",
        "supplier audits for brake components", "shop floor safety inspections"],
       [("Diploma", "Automotive Technology"), ("BEng", "Automotive Engineering"), ("AAS", "Mechanical Technology")]),
    _p("Chef", "Culinary",
       ["Sous Chef", "Head Chef", "Line Cook", "Pastry Chef"],
       ["Menu Planning", "Food Safety", "Inventory Management", "Culinary Arts", "Kitchen Management", "Cost Control", "Pastry"],
       ["seasonal menus for a ninety-seat restaurant", "food cost tracking and supplier orders",
        "a brigade of eight kitchen staff", "catering for private events",
        "hygiene inspections and temperature logs", "new dessert recipes for the tasting menu"],
       [("Diploma", "Culinary Arts"), ("AAS", "Baking and Pastry"), ("BA", "Hospitality Management")]),
    _p("Finance", "Finance",
       ["Financial Analyst", "Finance Manager", "Investment Analyst", "FP&A Analyst"],
       ["Financial Modeling", "Microsoft Excel", "Financial Reporting", "Budgeting", "Forecasting", "SAP", "Risk Management", "Bloomberg Terminal"],
       ["monthly variance analysis for business units", "valuation models for acquisition targets",
        "the annual budgeting process", "cash flow forecasts for treasury",
        "investor reporting packs", "internal controls documentation"],
       [("BSc", "Finance"), ("MSc", "Financial Economics"), ("MBA", "Corporate Finance")]),
    _p("Apparel", "Fashion",
       ["Fashion Designer", "Merchandiser", "Product Developer", "Textile Designer"],
       ["Fashion Design", "Textile Knowledge", "Adobe Illustrator", "Merchandising", "Pattern Making", "Trend Analysis", "Visual Merchandising"],
       ["seasonal collections from concept to sample", "tech packs for overseas factories",
        "fabric sourcing with mills", "store layouts for flagship locations",
        "fit sessions with production teams", "trend reports for buying teams"],
       [("BA", "Fashion Design"), ("BSc", "Textile Technology"), ("Diploma", "Apparel Merchandising")]),
    _p("Accountant", "Accounting",
       ["Staff Accountant", "Senior Accountant", "Accounts Payable Specialist", "Tax Accountant"],
       ["Accounts Payable", "QuickBooks", "Microsoft Excel", "GAAP", "Tax Preparation", "Reconciliation", "Auditing", "SAP"],
       ["month-end close for four entities", "vendor invoices and payment runs",
        "bank reconciliations for operating accounts", "tax returns for small businesses",
        "audit requests from external auditors", "fixed asset registers"],
       [("BCom", "Accounting"), ("BSc", "Accounting and Finance"), ("MAcc", "Accountancy")]),
    _p("Construction", "Construction",
       ["Site Engineer", "Construction Manager", "Project Coordinator", "Estimator"],
       ["Project Management", "AutoCAD", "OSHA Compliance", "Blueprint Reading", "Cost Estimation", "Scheduling", "Site Supervision"],
       ["daily site inspections for a mid-rise build", "subcontractor schedules and progress meetings",
        "material takeoffs from drawings", "safety briefings for site crews",
        "change order documentation", "handover of a twelve-unit residential project"],
       [("BSc", "Construction Management"), ("BEng", "Civil Engineering"), ("Diploma", "Building Technology")]),
    _p("Public-Relations", "Communications",
       ["PR Specialist", "Communications Manager", "Media Relations Officer", "PR Account Executive"],
       ["Media Relations", "Press Releases", "Crisis Communication", "Social Media Marketing", "Event Planning", "Copywriting", "Brand Management"],
       ["press coverage for product announcements", "media lists for regional outlets",
        "executive speaking opportunities", "crisis response statements",
        "launch events with two hundred guests", "monthly coverage reports for clients"],
       [("BA", "Public Relations"), ("BA", "Communication Studies"), ("MA", "Strategic Communication")]),
    _p("Banking", "Banking",
       ["Bank Teller", "Loan Officer", "Relationship Manager", "Credit Analyst"],
       ["Customer Service", "Loan Processing", "KYC", "Anti-Money Laundering", "Credit Analysis", "Microsoft Excel", "Cash Handling"],
       ["loan applications for small businesses", "customer identity checks at account opening",
        "credit memos for commercial borrowers", "daily cash balancing at the branch",
        "a portfolio of sixty retail clients", "suspicious activity reviews"],
       [("BCom", "Banking and Finance"), ("BSc", "Economics"), ("MBA", "Finance")]),
    _p("Arts", "Arts",
       ["Visual Artist", "Art Director", "Illustrator", "Gallery Coordinator"],
       ["Painting", "Adobe Photoshop", "Art Direction", "Illustration", "Sculpture", "Art History", "Exhibition Curation"],
       ["solo exhibitions at regional galleries", "illustrations for children's books",
        "art workshops for community centers", "installation logistics for touring shows",
        "commissioned murals for public spaces", "catalogue essays for new acquisitions"],
       [("BFA", "Fine Arts"), ("MFA", "Painting"), ("BA", "Art History")]),
    _p("Aviation", "Aviation",
       ["Commercial Pilot", "Aircraft Maintenance Technician", "Flight Dispatcher", "Aviation Safety Officer"],
       ["Flight Operations", "FAA Regulations", "Aircraft Maintenance", "Safety Management", "Navigation", "Crew Resource Management", "Flight Planning"],
       ["scheduled flights on regional routes", "line maintenance on narrow-body aircraft",
        "flight plans for charter operations", "safety audits of ground handling",
        "recurrent training for cabin crews", "incident reports for the safety board"],
       [("BSc", "Aeronautical Science"), ("BSc", "Aviation Management"), ("Diploma", "Aircraft Maintenance")]),
)

DUTY_VERBS = (
    "Led", "Managed", "Coordinated", "Delivered", "Improved", "Streamlined",
    "Supported", "Planned", "Oversaw", "Organized", "Handled", "Developed",
)

FIRST_NAMES = (
    "James", "Mary", "Robert", "Patricia", "John", "Jennifer", "Michael", "Linda",
    "David", "Elizabeth", "William", "Barbara", "Richard", "Susan", "Joseph", "Jessica",
    "Thomas", "Sarah", "Charles", "Karen", "Daniel", "Nancy", "Matthew", "Lisa",
    "Anthony", "Betty", "Mark", "Sandra", "Steven", "Ashley", "Amina", "Omar",
    "Priya", "Rahul", "Mei", "Wei", "Fatima", "Yusuf", "Elena", "Mateo",
)

LAST_NAMES = (
    "Smith", "Johnson", "Williams", "Brown", "Jones", "Garcia", "Miller", "Davis",
    "Rodriguez", "Martinez", "Hernandez", "Lopez", "Wilson", "Anderson", "Thomas", "Taylor",
    "Moore", "Jackson", "Martin", "Lee", "Thompson", "White", "Harris", "Clark",
    "Lewis", "Walker", "Hall", "Young", "Khan", "Patel", "Nguyen", "Kim",
    "Al-Sayed", "Haddad", "Okafor", "Rossi", "Novak", "Silva", "Kowalski", "Tanaka",
)

EMAIL_DOMAINS = ("gmail.com", "outlook.com", "yahoo.com", "proton.me", "mail.com", "fastmail.com")

COMPANIES = (
    "Acme Corporation", "Globex Industries", "Initech Solutions", "Umbrella Holdings",
    "Stark Manufacturing", "Wayne Enterprises", "Hooli Systems", "Vandelay Imports",
    "Soylent Foods", "Cyberdyne Labs", "Tyrell Group", "Wonka Confectionery",
    "Oceanic Logistics", "Pied Piper Networks", "Massive Dynamic", "Aperture Services",
    "Blue Harbor Partners", "Northwind Traders", "Contoso Retail", "Fabrikam Health",
    "Litware Consulting", "Tailspin Aviation", "Woodgrove Bank", "Adventure Works",
    "Proseware Media", "Lucerne Publishing", "Fourth Coffee", "Alpine Ski House",
    "Coho Vineyard", "Graphic Design Institute", "Margie's Travel", "Trey Research",
)

CITIES = (
    "Boston, MA", "Austin, TX", "Seattle, WA", "Denver, CO", "Chicago, IL", "Atlanta, GA",
    "Toronto, ON", "London, UK", "Manchester, UK", "Dublin, Ireland", "Berlin, Germany",
    "Doha, Qatar", "Dubai, UAE", "Singapore", "Sydney, Australia", "Bangalore, India",
    "Phoenix, AZ", "Portland, OR", "Miami, FL", "Columbus, OH",
)

# location strings used by the mock backends to inject outliers; disjoint from CITIES
OUTLIER_LOCATIONS = (
    "Reykjavik, Iceland", "Ulaanbaatar, Mongolia", "Nuuk, Greenland", "Hobart, Tasmania",
    "Tromso, Norway", "Ushuaia, Argentina", "Longyearbyen, Svalbard", "Apia, Samoa",
)

INSTITUTIONS = (
    "State University", "Riverside College", "Northern Institute of Technology",
    "Lakeside University", "Metropolitan College", "Westfield University",
    "Eastbridge Polytechnic", "Central Academy", "Hillcrest University",
    "Pacific Coast College", "Summit Institute", "Greenvale University",
    "Qatar University", "University of Leeds", "Harbor City Community College",
)

HALLUCINATED_SKILLS = (
    "Blockchain", "Quantum Computing", "COBOL", "Fortran", "Haskell", "Kubernetes",
    "Scrum", "Tableau", "Power BI", "Snowflake", "Terraform", "Ansible",
    "Spanish", "Mandarin", "Public Speaking", "Leadership", "Time Management", "Jira",
)
